#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace casimir {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (GMP canonicalizes after every operation we perform).
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms. The two-argument mpq_class constructor does not
/// canonicalize, so fractions are built through this helper.
inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "a" or "a/b" (optional sign, surrounding whitespace ignored).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Integer value of q; q must be an integer that fits in a long.
long to_long(const Rational& q);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

}  // namespace casimir
