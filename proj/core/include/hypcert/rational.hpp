#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace hypcert {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "n", "-n", "n/d" (d != 0). The result is canonicalized.
Rational parse_rational(std::string_view text);

/// Renders as "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Largest s with s*s <= n. Requires n >= 0.
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

/// Returns {s, r} with n = s^2 * r and r squarefree. Requires n > 0.
/// Throws DomainError when n is too large to be split by trial division.
std::pair<Integer, Integer> square_free_split(const Integer& n);

Integer binomial(const Integer& n, unsigned long k);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace hypcert
