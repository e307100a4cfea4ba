#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace regge {

/// Exact scalar used throughout. mpq_class keeps values canonical as long as
/// construction goes through from_fraction / parse_rational.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational from_fraction(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p/q", "-p", "p" (whitespace not allowed inside).
Rational parse_rational(std::string_view text);

/// Inverse of parse_rational: integers print without "/1".
std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace regge
