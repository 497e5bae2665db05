#pragma once

#include <gmpxx.h>

#include <string>

namespace veerlab {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

// "p/q" with q > 0, or "p" when q == 1.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline int sign_of(const Integer& z) { return sgn(z); }
inline int sign_of(const Rational& q) { return sgn(q); }

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace veerlab
