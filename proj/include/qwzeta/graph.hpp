#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qwzeta/matrix.hpp"

namespace qwz {

// Undirected multigraph with loops. Edge list order is stable: it induces the
// canonical arc ordering used by every matrix in the library.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> e);

  int edge_count() const { return static_cast<int>(edges.size()); }
};

// The 2m oriented arcs of a graph: arc 2i is edge i traversed u->v, arc 2i+1
// its inverse.
struct ArcTable {
  int arc_count = 0;
  std::vector<int> origin;
  std::vector<int> terminus;
  std::vector<int> inverse;
};

ArcTable build_arc_table(const Graph& g);

inline constexpr int kGirthInfinity = std::numeric_limits<int>::max();

struct GraphStats {
  std::vector<int> degrees;
  int min_degree = 0;
  bool is_regular = false;
  int regular_degree = 0;  // meaningful when is_regular
  int girth = kGirthInfinity;
  bool connected = false;
  int betti = 0;  // m - n + 1, meaningful when connected
};

GraphStats compute_stats(const Graph& g);

struct GenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InfeasibleParams : GenerateError {
  using GenerateError::GenerateError;
};
struct RetryLimitExceeded : GenerateError {
  using GenerateError::GenerateError;
};

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph petersen_graph();
Graph heawood_graph();
Graph mcgee_graph();
Graph circulant_graph(int n, const std::vector<int>& offsets);
// Configuration-model sampling with rejection of loops/parallel edges and a
// post-hoc girth filter. Identical seeds reproduce identical graphs.
Graph random_regular_graph(int n, int k, int min_girth, std::uint64_t seed,
                           int max_retries = 10000);

struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& message);
  int line = 0;
};

// Format: "n m" header, then m lines "u v" (0-indexed); '#' lines ignored.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// Arc-level digraph strong connectivity: entry (e,f) nonzero means arc e->f.
// A single vertex with no arcs counts as strongly connected.
bool strongly_connected(const IntMatrix& adjacency);

}  // namespace qwz
