#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwzeta/rational.hpp"

namespace qwz {

// Univariate polynomial over Q with ascending coefficients. When
// truncation_order is set the object is a power series cut after that order;
// otherwise trailing zero coefficients are stripped (the zero polynomial is
// stored as a single 0).
class Poly {
 public:
  Poly() : coeffs_{Rat(0)} {}
  explicit Poly(std::vector<Rat> coeffs, std::optional<int> trunc = std::nullopt);

  static Poly constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }
  static Poly monomial(int k, const Rat& c = Rat(1));

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  std::optional<int> truncation_order() const { return trunc_; }
  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const;
  Rat coeff(int k) const;  // 0 outside the stored range

  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<Rat> coeffs_;
  std::optional<int> trunc_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& p, int k);
Rat poly_eval(const Poly& p, const Rat& x);
std::complex<double> poly_eval(const Poly& p, std::complex<double> x);

// Synthetic division by (u - root); returns quotient and remainder.
std::pair<Poly, Rat> poly_divide_linear(const Poly& p, const Rat& root);
int root_multiplicity(const Poly& p, const Rat& root);

// Exact division; throws std::domain_error on a nonzero remainder.
Poly poly_divide_exact(const Poly& num, const Poly& den);

Poly series_truncate(const Poly& p, int order);
Poly series_invert(const Poly& p, int order);  // requires constant term 1
Poly series_log(const Poly& p, int order);     // requires constant term 1
Poly series_exp(const Poly& p, int order);     // requires constant term 0

// Ascending "p/q" coefficients separated by spaces, e.g. "1 0 0 -2 0 0 1".
std::string poly_to_string(const Poly& p);

}  // namespace qwz
