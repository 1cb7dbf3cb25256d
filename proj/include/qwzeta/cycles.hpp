#pragma once

#include <vector>

#include "qwzeta/graph.hpp"
#include "qwzeta/matrix.hpp"
#include "qwzeta/poly.hpp"
#include "qwzeta/report.hpp"

namespace qwz {

// N_k = tr(M^k) for k = 1..max_k, exact.
std::vector<Int> trace_counts(const IntMatrix& m, int max_k);

// One rotation class of closed walks in a digraph; the representative is the
// lexicographically minimal rotation. Inverse cycles are distinct classes.
struct CycleClass {
  int length = 0;
  std::vector<int> representative;
  bool is_prime = true;
};

struct PrimeCycleCensus {
  int max_len = 0;
  // counts[l-1] = number of prime rotation classes of length l.
  std::vector<long long> counts;
  bool reps_collected = false;
  std::vector<CycleClass> classes;  // filled when reps were requested

  long long count(int len) const { return counts.at(len - 1); }
};

inline constexpr int kMaxCycleLength = 12;

// All rotation classes of prime closed walks of length <= max_len in the
// digraph of a 0/1 matrix. Start arcs are enumerated in parallel; counting
// does not require storing representatives, so huge censuses stay cheap.
// max_len above the hard cap of 12 is clamped with a warning on stderr.
PrimeCycleCensus enumerate_prime_classes(const IntMatrix& m, int max_len,
                                         bool collect_reps = false);

namespace serial {
// Reference enumerator: depth-first search restricted to nodes >= start with
// an explicit minimal-rotation test; always collects representatives.
PrimeCycleCensus enumerate_prime_classes(const IntMatrix& m, int max_len);
}  // namespace serial

// prod over classes of (1 - u^|C|), truncated at `order`. The census must
// cover every length up to `order`.
Poly euler_product_series(const PrimeCycleCensus& census, int order);
Poly euler_product_series(const std::vector<CycleClass>& classes, int order);

// series_exp(-sum N_k/k u^k) == det(I - uM) mod u^(order+1), exact.
VerificationReport exp_expression_check(const IntMatrix& m, int order);

// Independent closed-walk counter (exhaustive DFS), used as the oracle for
// trace_counts in tests.
std::vector<long long> count_closed_walks_dfs(const IntMatrix& m, int max_k);

// Step classification against the original graph, for lifting enumerated
// cycles of the (U^3)+ digraph back to 3-paths: a step e -> f is either an
// ordinary non-backtracking step (t(e) = o(f), f != e^-1) or a reversed
// 3-arc (a reduced three-step path f -> e exists).
bool is_ordinary_step(const ArcTable& arcs, int e, int f);
bool has_reduced_three_path(const Graph& g, const ArcTable& arcs, int from, int to);

}  // namespace qwz
