#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qwzeta/graph.hpp"
#include "qwzeta/matrix.hpp"
#include "qwzeta/report.hpp"

namespace qwz {

// The matrices attached to a graph under the canonical arc ordering:
//   U   2m x 2m Grover transition matrix,
//   B   arc adjacency (B_ef = 1 iff t(e) = o(f)),
//   J0  inverse-pair indicator,
//   K   n x 2m terminus incidence, L n x 2m origin incidence,
//   A   vertex adjacency (a loop adds 2 to its diagonal entry),
//   D   diagonal degree matrix.
struct OperatorBundle {
  RatMatrix U;
  IntMatrix B;
  IntMatrix J0;
  IntMatrix K;
  IntMatrix L;
  IntMatrix A;
  IntMatrix D;
};

OperatorBundle build_operators(const Graph& g, const ArcTable& arcs);
OperatorBundle build_operators(const Graph& g);

// U_ef = 2/d_t(f) when t(f) = o(e) and f != e^-1, 2/d_t(f) - 1 when f = e^-1.
// Throws on an isolated vertex.
RatMatrix grover_matrix(const Graph& g, const ArcTable& arcs);

// 0/1 matrix marking strictly positive entries (exact sign test).
IntMatrix positive_support(const RatMatrix& m);

// B - J0 = (tU)+ on md2 graphs.
VerificationReport check_ren(const Graph& g);
// (U^2)+ = (U+)^2 + I on k-regular graphs with k > 2.
VerificationReport check_godsil_guo(const Graph& g);
// (U^3)+ = (U+)^3 + t(U+) when delta > 2 and girth > 4. U^3 is computed in
// exact rationals so the check is independent of the claimed structure.
VerificationReport check_cube_structure(const Graph& g);

// (U^3)+ from the exact cube.
IntMatrix cube_support(const Graph& g);

// The eight products of T = B - J0 and P = J0 whose sum is B^3, in the order
// T^3, T^2P, TPT, PT^2, TP^2, P^2T, PTP, P^3.
std::vector<std::pair<std::string, IntMatrix>> decompose_cube(const Graph& g);

}  // namespace qwz
