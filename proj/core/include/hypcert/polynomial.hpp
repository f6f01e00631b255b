#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypcert/rational.hpp"

namespace hypcert {

/// Univariate polynomial over Q in the variable t, coefficients from degree 0 up.
/// Leading zeros are always trimmed, so the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  /// t^k
  static Poly monomial(int k, const Rational& c = 1);
  static Poly from_integers(const std::vector<Integer>& coeffs);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& k);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& k) { return a *= k; }
  friend Poly operator*(const Rational& k, Poly a) { return a *= k; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; throws DomainError for division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

Poly pow(const Poly& a, unsigned k);
/// Scaled to leading coefficient 1 (zero stays zero).
Poly monic(const Poly& a);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly derivative(const Poly& a);
/// Product of the distinct monic irreducible factors.
Poly radical(const Poly& a);
/// No repeated factor over Q. Decided modulo a large prime when possible.
bool is_squarefree(const Poly& a);

/// Largest k with p^k | f, for nonconstant p and nonzero f.
int valuation(const Poly& f, const Poly& p);

/// Integer coefficient vector of the primitive part (positive leading coefficient).
std::vector<Integer> primitive_integer(const Poly& a);

/// "3/2*t^2 - t + 1"; "0" for zero.
std::string to_string(const Poly& p, std::string_view var = "t");
/// Accepts sums of terms c, c*t, t^k, c*t^k (c rational); whitespace ignored.
Poly parse_poly(std::string_view text, std::string_view var = "t");

}  // namespace hypcert
