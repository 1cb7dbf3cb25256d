#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qwzeta/graph.hpp"
#include "qwzeta/linalg.hpp"
#include "qwzeta/poly.hpp"
#include "qwzeta/report.hpp"

namespace qwz {

// Ihara zeta reciprocal, edge form: det(I_2m - u(B - J0)).
Poly ihara_edge_form(const Graph& g);
// Bass form: (1-u^2)^(r-1) det(I_n - uA + u^2(D - I)). Requires a connected
// graph; the r = 0 (tree) case divides the determinant by (1-u^2) exactly.
Poly ihara_bass_form(const Graph& g);
// det(I - u U+) equals the edge form (md2).
VerificationReport check_prop_3_2(const Graph& g);

// 3-modified zeta reciprocal: det(I_2m - u (U^3)+).
Poly z3_reciprocal(const Graph& g);
// Regular closed form:
// (1-4u^2)^(m-n) det(I - u(A^3-(3k-4)A) + u^2(A^4 - k^2 A^2 + 2(k-1)(k^2-2k+2) I)).
// Requires k-regular, k > 2, girth > 4.
Poly z3_closed_regular(const Graph& g);

struct SingularSampleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluates the general (possibly irregular) determinant expression for the
// 3-modified zeta reciprocal at a rational sample point. Throws
// SingularSampleError when the inner matrix is singular at u (the caller
// retries at another point). Requires delta > 2 and girth > 4.
Rat z3_general_eval(const Graph& g, const Rat& u);

// Pointwise verification of the general determinant expression against
// det(I - u(U^3)+) at `points` successful sample values u = 1/q. Singular
// samples are skipped and recorded in the report notes.
VerificationReport check_thm_5_1(const Graph& g, int points = 3);

// char_poly((U^3)+) = (l^2-4)^(m-n) det(l^2 I - l(A^3-(3k-4)A) + C0) with
// C0 = A^4 - k^2 A^2 + 2(k-1)(k^2-2k+2) I.
VerificationReport check_cor_5_3(const Graph& g);

// char_poly(U+) = (l^2-1)^(m-n) det(l^2 I - lA + (k-1)I), k-regular md2.
VerificationReport check_thm_2_1_identity(const Graph& g);
// char_poly((U^2)+) = (l-2)^(2(m-n)) det(l^2 I - l(A^2-(2k-4)I) + A^2+(k-2)^2 I),
// k-regular with k > 2.
VerificationReport check_thm_2_2_identity(const Graph& g);

struct SpectrumReport {
  int regular_degree = 0;
  int vertex_count = 0;
  int edge_count = 0;
  std::vector<double> adjacency_eigenvalues;
  // Quadratic-root pair per adjacency eigenvalue (2n derived eigenvalues).
  struct DerivedPair {
    double lambda_a = 0;
    std::complex<double> plus;
    std::complex<double> minus;
  };
  std::vector<DerivedPair> derived_pairs;
  int trivial_multiplicity = 0;  // m-n copies each of +2 and -2
  // Reciprocals of the nonzero eigenvalues, plus +-1/2 with multiplicity m-n.
  std::vector<std::complex<double>> poles;
  int zero_eigenvalues_dropped = 0;  // zero eigenvalues contribute no pole
  double spectral_radius = 0;
  double radius_of_convergence = 0;
  Rat paper_radius_claim;  // 1/(k^3+k-1), recorded for side-by-side display
};

// Roots of l^2 - lambda_a(lambda_a^2-3k+4) l + (lambda_a^4 - k^2 lambda_a^2
// + 2(k-1)(k^2-2k+2)) per adjacency eigenvalue, plus the +-2 block. The
// coefficients come from the verified characteristic-polynomial identity, not
// from the printed closed-form discriminant.
SpectrumReport spectra_from_adjacency(int k, const std::vector<double>& adjacency_eigs,
                                      int n, int m);

// Full report for a k-regular graph with k > 2 and girth > 4: adjacency
// spectrum via Jacobi, derived pairs, poles, spectral radius of (U^3)+ (row
// sums pin it exactly here), radius of convergence, and the paper's claimed
// radius for comparison.
SpectrumReport compute_spectrum_report(const Graph& g);

}  // namespace qwz
