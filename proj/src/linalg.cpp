#include "qwzeta/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qwz {

namespace {

void require_square(const auto& m, const char* who) {
  if (!m.square()) throw std::invalid_argument(std::string(who) + ": matrix is not square");
}

// Destructive Bareiss elimination. Row updates at each step are independent,
// so they run in parallel for larger matrices.
Int bareiss(IntMatrix a) {
  const int n = a.rows();
  if (n == 0) return Int(1);
  int sign = 1;
  Int prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return Int(0);
      for (int j = k; j < n; ++j) swap(a(k, j), a(pivot, j));
      sign = -sign;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (n - k > 24)
#endif
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  Int det = a(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

// Evaluation nodes 0, 1, -1, 2, -2, ...
std::vector<Int> eval_nodes(int count) {
  std::vector<Int> xs;
  xs.reserve(count);
  Int v(0);
  while (static_cast<int>(xs.size()) < count) {
    xs.push_back(v);
    if (v > 0)
      v = -v;
    else
      v = -v + 1;
  }
  return xs;
}

}  // namespace

Int det_exact(const IntMatrix& m) {
  require_square(m, "det_exact");
  return bareiss(m);
}

Rat det_exact(const RatMatrix& m) {
  require_square(m, "det_exact");
  const int n = m.rows();
  IntMatrix a(n, n);
  Int denom(1);
  for (int i = 0; i < n; ++i) {
    Int l(1);
    for (int j = 0; j < n; ++j) {
      Int d = m(i, j).get_den();
      l = l / gcd(l, d) * d;
    }
    for (int j = 0; j < n; ++j) a(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    denom *= l;
  }
  return make_rat(bareiss(std::move(a)), denom);
}

Poly interpolate(const std::vector<Int>& xs, const std::vector<Rat>& ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw std::invalid_argument("interpolate: bad node count");
  const int n = static_cast<int>(xs.size());
  // Newton divided differences, then expansion in the monomial basis.
  std::vector<Rat> coef = ys;
  for (int j = 1; j < n; ++j)
    for (int i = n - 1; i >= j; --i)
      coef[i] = (coef[i] - coef[i - 1]) / Rat(xs[i] - xs[i - j]);
  std::vector<Rat> poly(static_cast<size_t>(n), Rat(0));
  std::vector<Rat> basis{Rat(1)};  // prod_{t<k} (x - xs[t])
  for (int k = 0; k < n; ++k) {
    for (size_t i = 0; i < basis.size(); ++i) poly[i] += coef[k] * basis[i];
    if (k + 1 < n) {
      std::vector<Rat> next(basis.size() + 1, Rat(0));
      for (size_t i = 0; i < basis.size(); ++i) {
        next[i + 1] += basis[i];
        next[i] -= Rat(xs[k]) * basis[i];
      }
      basis = std::move(next);
    }
  }
  return Poly(std::move(poly));
}

Poly char_poly(const IntMatrix& m) {
  require_square(m, "char_poly");
  const int n = m.rows();
  if (n == 0) return Poly::constant(1);
  const std::vector<Int> xs = eval_nodes(n + 1);
  std::vector<Rat> ys(xs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int idx = 0; idx < static_cast<int>(xs.size()); ++idx) {
    IntMatrix b(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b(i, j) = (i == j ? xs[idx] : Int(0)) - m(i, j);
    ys[idx] = Rat(bareiss(std::move(b)));
  }
  return interpolate(xs, ys);
}

Poly det_i_minus_um(const IntMatrix& m) {
  const Poly cp = char_poly(m);
  const int n = m.rows();
  std::vector<Rat> rev(static_cast<size_t>(n) + 1, Rat(0));
  for (int j = 0; j <= n; ++j) rev[j] = cp.coeff(n - j);
  return Poly(std::move(rev));
}

Poly det_poly_matrix(const RatMatrix& m0, const RatMatrix& m1, const RatMatrix& m2) {
  require_square(m0, "det_poly_matrix");
  if (m1.rows() != m0.rows() || m1.cols() != m0.cols() || m2.rows() != m0.rows() ||
      m2.cols() != m0.cols())
    throw std::invalid_argument("det_poly_matrix: dimension mismatch");
  const int s = m0.rows();
  if (s == 0) return Poly::constant(1);
  const std::vector<Int> xs = eval_nodes(2 * s + 1);
  std::vector<Rat> ys(xs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int idx = 0; idx < static_cast<int>(xs.size()); ++idx) {
    Rat x(xs[idx]);
    Rat x2 = x * x;
    RatMatrix b(s, s);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) b(i, j) = m0(i, j) + x * m1(i, j) + x2 * m2(i, j);
    ys[idx] = det_exact(b);
  }
  return interpolate(xs, ys);
}

RatMatrix inverse_exact(const RatMatrix& m) {
  require_square(m, "inverse_exact");
  const int n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (a(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw SingularMatrixError("inverse_exact: singular matrix");
    if (pivot != c)
      for (int j = 0; j < n; ++j) {
        swap(a(c, j), a(pivot, j));
        swap(inv(c, j), inv(pivot, j));
      }
    Rat pv = a(c, c);
    for (int j = 0; j < n; ++j) {
      a(c, j) /= pv;
      inv(c, j) /= pv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rat f = a(r, c);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

double power_iteration(const IntMatrix& m, double tol, int max_iter) {
  require_square(m, "power_iteration");
  const int n = m.rows();
  if (n == 0) throw std::invalid_argument("power_iteration: empty matrix");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m(i, j) < 0) throw std::invalid_argument("power_iteration: negative entry");

  // Equal row sums pin the Perron value exactly.
  Int first(0);
  bool equal = true;
  for (int i = 0; i < n; ++i) {
    Int s(0);
    for (int j = 0; j < n; ++j) s += m(i, j);
    if (i == 0)
      first = s;
    else if (s != first)
      equal = false;
  }
  if (equal) return first.get_d();

  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j).get_d();
  std::vector<double> v(n, 1.0), w(n);
  double est = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += a[i][j] * v[j];
      w[i] = s;
      norm = std::max(norm, std::fabs(s));
    }
    if (norm == 0.0) return 0.0;
    // Rayleigh-style ratio with the all-ones weighting.
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
      num += w[i];
      den += v[i];
    }
    double next = den != 0.0 ? num / den : norm;
    for (int i = 0; i < n; ++i) v[i] = w[i] / norm;
    if (it > 0 && std::fabs(next - est) <= tol * std::max(1.0, std::fabs(next))) return next;
    est = next;
  }
  throw ConvergenceError("power_iteration: no convergence after max_iter");
}

std::vector<double> jacobi_eigen(const RatMatrix& m, double tol) {
  require_square(m, "jacobi_eigen");
  const int n = m.rows();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m(i, j) != m(j, i)) throw std::invalid_argument("jacobi_eigen: asymmetric matrix");
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a[i][j] = m(i, j).get_d();
      scale = std::max(scale, std::fabs(a[i][j]));
    }
  if (scale == 0.0) scale = 1.0;

  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (std::sqrt(off) <= tol * scale * n) {
      std::vector<double> eigs(n);
      for (int i = 0; i < n; ++i) eigs[i] = a[i][i];
      std::sort(eigs.begin(), eigs.end());
      return eigs;
    }
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int i = 0; i < n; ++i) {
          double aip = a[i][p], aiq = a[i][q];
          a[i][p] = c * aip - s * aiq;
          a[i][q] = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          double api = a[p][i], aqi = a[q][i];
          a[p][i] = c * api - s * aqi;
          a[q][i] = s * api + c * aqi;
        }
      }
  }
  throw ConvergenceError("jacobi_eigen: sweep cap exceeded");
}

namespace serial {

Poly char_poly(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("char_poly: matrix is not square");
  const int n = m.rows();
  if (n == 0) return Poly::constant(1);
  RatMatrix a = to_rational(m);
  std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
  c[n] = 1;
  RatMatrix mk = a;
  for (int k = 1; k <= n; ++k) {
    Rat tr(0);
    for (int i = 0; i < n; ++i) tr += mk(i, i);
    c[n - k] = -tr / k;
    if (k < n) {
      for (int i = 0; i < n; ++i) mk(i, i) += c[n - k];
      mk = serial::mul(a, mk);
    }
  }
  return Poly(std::move(c));
}

}  // namespace serial

}  // namespace qwz
