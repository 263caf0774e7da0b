#pragma once

#include <gmpxx.h>

#include <string>

namespace ebrauer {

// Scalar field for every computation in this project: exact rationals backed
// by GMP. mpq arithmetic keeps values canonical (gcd(num, den) = 1, den > 0).
using Rational = mpq_class;

inline Rational rat(long v) { return Rational(v); }

inline Rational rat(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "a" or "a/b". Throws std::invalid_argument on malformed input or b = 0.
Rational rational_from_string(const std::string& text);

std::string to_string(const Rational& q);

}  // namespace ebrauer
