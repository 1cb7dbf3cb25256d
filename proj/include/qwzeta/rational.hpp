#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qwz {

// Arbitrary-precision integers and rationals. mpq_class keeps the invariants
// we need: always reduced, denominator positive, zero stored as 0/1.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

// "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Parses "p" or "p/q".
Rat rat_from_string(const std::string& s);

}  // namespace qwz
