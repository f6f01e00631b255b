#include "hypcert/rational.hpp"

#include <cctype>

#include "hypcert/errors.hpp"

namespace hypcert {

namespace {

bool valid_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer_literal(s)) {
    throw ConfigError("not an integer literal: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

// All prime factors of the remainder exceed this after trial division.
constexpr unsigned long kTrialLimit = 1000000;

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(parse_integer(text));
  } else {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
    q = Rational(num, den);
    q.canonicalize();
  }
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw DomainError("isqrt of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::pair<Integer, Integer> square_free_split(const Integer& n) {
  if (n <= 0) throw DomainError("square_free_split needs a positive integer");
  Integer rest = n;
  Integer square = 1;
  Integer core = 1;
  auto strip = [&](unsigned long p) {
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++exponent;
    }
    for (unsigned k = 0; k < exponent / 2; ++k) square *= p;
    if (exponent % 2 == 1) core *= p;
  };
  strip(2);
  for (unsigned long p = 3; p <= kTrialLimit; p += 2) {
    Integer pp(p);
    if (pp * pp * pp > rest) break;
    strip(p);
  }
  if (rest > 1) {
    if (is_perfect_square(rest)) {
      square *= isqrt(rest);
    } else {
      // Every prime below the trial bound is gone, so below bound^3 the
      // remainder is p, p*q or p^2 and the square test above settles it.
      Integer bound(kTrialLimit);
      if (rest >= bound * bound * bound) {
        throw DomainError("integer too large for square-free splitting: " + n.get_str());
      }
      core *= rest;
    }
  }
  return {square, core};
}

Integer binomial(const Integer& n, unsigned long k) {
  if (n < 0) return 0;
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

}  // namespace hypcert
