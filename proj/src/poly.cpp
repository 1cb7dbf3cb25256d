#include "qwzeta/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace qwz {

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

Poly::Poly(std::vector<Rat> coeffs, std::optional<int> trunc)
    : coeffs_(std::move(coeffs)), trunc_(trunc) {
  if (trunc_) {
    if (*trunc_ < 0) throw std::invalid_argument("negative truncation order");
    coeffs_.resize(static_cast<size_t>(*trunc_) + 1, Rat(0));
  } else {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(Rat(0));
  }
}

Poly Poly::monomial(int k, const Rat& c) {
  std::vector<Rat> v(static_cast<size_t>(k) + 1, Rat(0));
  v[k] = c;
  return Poly(std::move(v));
}

int Poly::degree() const {
  for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i)
    if (coeffs_[i] != 0) return i;
  return -1;
}

bool Poly::is_zero() const { return degree() < 0; }

Rat Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[k];
}

namespace {

std::optional<int> merge_trunc(const Poly& a, const Poly& b) {
  if (a.truncation_order() && b.truncation_order())
    return std::min(*a.truncation_order(), *b.truncation_order());
  if (a.truncation_order()) return a.truncation_order();
  return b.truncation_order();
}

}  // namespace

Poly poly_add(const Poly& a, const Poly& b) {
  size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Rat> out(n, Rat(0));
  for (size_t i = 0; i < n; ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Poly(std::move(out), merge_trunc(a, b));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Rat> out(n, Rat(0));
  for (size_t i = 0; i < n; ++i) out[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return Poly(std::move(out), merge_trunc(a, b));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  auto trunc = merge_trunc(a, b);
  size_t n = a.coeffs().size() + b.coeffs().size() - 1;
  if (trunc) n = std::min(n, static_cast<size_t>(*trunc) + 1);
  std::vector<Rat> out(n, Rat(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs().size() && i + j < n; ++j) {
      if (b.coeffs()[j] == 0) continue;
      out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
  }
  return Poly(std::move(out), trunc);
}

Poly poly_pow(const Poly& p, int k) {
  if (k < 0) throw std::invalid_argument("negative polynomial power");
  Poly acc = Poly::constant(1);
  Poly base = p;
  while (k > 0) {
    if (k & 1) acc = poly_mul(acc, base);
    k >>= 1;
    if (k) base = poly_mul(base, base);
  }
  return acc;
}

Rat poly_eval(const Poly& p, const Rat& x) {
  Rat acc(0);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> poly_eval(const Poly& p, std::complex<double> x) {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * x + std::complex<double>(it->get_d(), 0.0);
  return acc;
}

std::pair<Poly, Rat> poly_divide_linear(const Poly& p, const Rat& root) {
  int d = p.degree();
  if (d < 1) return {Poly(), p.coeff(0)};
  std::vector<Rat> q(static_cast<size_t>(d), Rat(0));
  Rat carry = p.coeff(d);
  for (int i = d - 1; i >= 0; --i) {
    q[i] = carry;
    carry = p.coeff(i) + root * carry;
  }
  return {Poly(std::move(q)), carry};
}

int root_multiplicity(const Poly& p, const Rat& root) {
  if (p.is_zero()) throw std::invalid_argument("root multiplicity of the zero polynomial");
  Poly cur = p;
  int mult = 0;
  while (cur.degree() >= 1) {
    auto [q, rem] = poly_divide_linear(cur, root);
    if (rem != 0) break;
    ++mult;
    cur = q;
  }
  return mult;
}

Poly poly_divide_exact(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  int dn = num.degree(), dd = den.degree();
  if (num.is_zero()) return Poly();
  if (dn < dd) throw std::domain_error("inexact polynomial division");
  std::vector<Rat> rem(num.coeffs().begin(), num.coeffs().begin() + dn + 1);
  std::vector<Rat> quot(static_cast<size_t>(dn - dd) + 1, Rat(0));
  const Rat lead = den.coeff(dd);
  for (int i = dn - dd; i >= 0; --i) {
    Rat c = rem[i + dd] / lead;
    quot[i] = c;
    if (c != 0)
      for (int j = 0; j <= dd; ++j) rem[i + j] -= c * den.coeff(j);
  }
  for (const Rat& r : rem)
    if (r != 0) throw std::domain_error("inexact polynomial division");
  return Poly(std::move(quot));
}

Poly series_truncate(const Poly& p, int order) {
  std::vector<Rat> out(static_cast<size_t>(order) + 1, Rat(0));
  for (int i = 0; i <= order; ++i) out[i] = p.coeff(i);
  return Poly(std::move(out), order);
}

Poly series_invert(const Poly& p, int order) {
  if (p.coeff(0) != 1) throw std::invalid_argument("series_invert needs constant term 1");
  std::vector<Rat> b(static_cast<size_t>(order) + 1, Rat(0));
  b[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rat s(0);
    for (int k = 1; k <= n; ++k) s += p.coeff(k) * b[n - k];
    b[n] = -s;
  }
  return Poly(std::move(b), order);
}

Poly series_log(const Poly& p, int order) {
  if (p.coeff(0) != 1) throw std::invalid_argument("series_log needs constant term 1");
  // log p = integral of p'/p
  Poly inv = series_invert(p, order);
  std::vector<Rat> deriv(static_cast<size_t>(order) + 1, Rat(0));
  for (int i = 0; i < order; ++i) deriv[i] = p.coeff(i + 1) * (i + 1);
  Poly prod = poly_mul(Poly(std::move(deriv), order), inv);
  std::vector<Rat> out(static_cast<size_t>(order) + 1, Rat(0));
  for (int i = 1; i <= order; ++i) out[i] = prod.coeff(i - 1) / i;
  return Poly(std::move(out), order);
}

Poly series_exp(const Poly& p, int order) {
  if (p.coeff(0) != 0) throw std::invalid_argument("series_exp needs constant term 0");
  // n e_n = sum_{k=1..n} k p_k e_{n-k}
  std::vector<Rat> e(static_cast<size_t>(order) + 1, Rat(0));
  e[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rat s(0);
    for (int k = 1; k <= n; ++k) s += Rat(k) * p.coeff(k) * e[n - k];
    e[n] = s / n;
  }
  return Poly(std::move(e), order);
}

std::string poly_to_string(const Poly& p) {
  std::ostringstream os;
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) os << ' ';
    os << to_string(p.coeffs()[i]);
  }
  return os.str();
}

}  // namespace qwz
