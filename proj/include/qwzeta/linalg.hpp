#pragma once

#include <stdexcept>
#include <vector>

#include "qwzeta/matrix.hpp"
#include "qwzeta/poly.hpp"

namespace qwz {

struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fraction-free (Bareiss) determinant.
Int det_exact(const IntMatrix& m);
// Clears denominators per row, runs Bareiss on integers, divides the row
// factors back out.
Rat det_exact(const RatMatrix& m);

// det(lambda I - m) by Bareiss evaluation at s+1 integer nodes plus exact
// interpolation; evaluations run in parallel.
Poly char_poly(const IntMatrix& m);

// det(I - u m): the reversed characteristic polynomial.
Poly det_i_minus_um(const IntMatrix& m);

// det(m0 + u m1 + u^2 m2) via 2s+1 evaluation nodes.
Poly det_poly_matrix(const RatMatrix& m0, const RatMatrix& m1, const RatMatrix& m2);

// Gauss-Jordan inverse; throws SingularMatrixError so callers can retry at
// another sample point.
RatMatrix inverse_exact(const RatMatrix& m);

// Perron eigenvalue of a nonnegative matrix. Equal row sums short-circuit to
// the exact common value; otherwise power iteration, throwing
// ConvergenceError after max_iter.
double power_iteration(const IntMatrix& m, double tol = 1e-12, int max_iter = 20000);

// Cyclic Jacobi sweeps on a symmetric matrix; ascending eigenvalues.
std::vector<double> jacobi_eigen(const RatMatrix& m, double tol = 1e-12);

// Newton interpolation through (xs[i], ys[i]); exact.
Poly interpolate(const std::vector<Int>& xs, const std::vector<Rat>& ys);

namespace serial {
// Faddeev-LeVerrier over Q: an independent route to the same polynomial,
// kept as the reference for the interpolation kernel.
Poly char_poly(const IntMatrix& m);
}  // namespace serial

}  // namespace qwz
