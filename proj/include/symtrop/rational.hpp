#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace symtrop {

// Exact rational scalar. mpq_class keeps the canonical form we rely on:
// reduced, positive denominator, zero stored as 0/1.
using Rat = mpq_class;

inline int sign(const Rat& x) { return sgn(x); }

inline Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  Rat r;
  if (slash == std::string::npos) {
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
      throw std::invalid_argument("bad rational: " + s);
  } else {
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
      throw std::invalid_argument("bad rational: " + s);
  }
  r.canonicalize();
  return r;
}

// Canonical "num/den" string, always with an explicit denominator.
inline std::string rat_str(const Rat& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

// Display form: omits the denominator when it is 1.
inline std::string rat_pretty(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return rat_str(x);
}

using RatVec = std::vector<Rat>;

// Sign of a + b*sqrt(r) for rational r >= 0.
inline int sign_plus_sqrt(const Rat& a, const Rat& b, const Rat& r) {
  if (sign(r) < 0) throw std::invalid_argument("negative radicand");
  if (sign(b) == 0 || sign(r) == 0) return sign(a);
  if (sign(a) == 0) return sign(b);
  if (sign(a) == sign(b)) return sign(a);
  Rat lhs = a * a, rhs = b * b * r;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sign(a) : sign(b);
}

}  // namespace symtrop
