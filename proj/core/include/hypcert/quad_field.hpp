#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "hypcert/rational.hpp"

namespace hypcert {

/// Exact element a + b*sqrt(d) of a real quadratic field Q(sqrt(d)).
///
/// Canonical form: d is a squarefree integer > 1, or d = 0 for rationals
/// (then b = 0). Square factors of the radicand are moved into b, so two
/// values of the same field are equal iff their fields are structurally equal.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadExt(long a) : a_(a) {}             // NOLINT(google-explicit-constructor)

  /// a + b*sqrt(delta) for any rational delta >= 0.
  QuadExt(const Rational& a, const Rational& b, const Rational& delta);

  static QuadExt sqrt(const Rational& delta) { return QuadExt(0, 1, delta); }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_coeff() const { return b_; }
  /// Squarefree radicand, or 0 for rational values.
  const Integer& radicand() const { return d_; }
  bool is_rational() const { return d_ == 0; }

  QuadExt conjugate() const;
  /// a^2 - b^2 d.
  Rational norm() const;

  /// Exact sign in {-1, 0, +1}.
  int sign() const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& rhs);
  QuadExt& operator-=(const QuadExt& rhs);
  QuadExt& operator*=(const QuadExt& rhs);
  QuadExt& operator/=(const QuadExt& rhs);

  friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
  friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
  friend QuadExt operator*(QuadExt lhs, const QuadExt& rhs) { return lhs *= rhs; }
  friend QuadExt operator/(QuadExt lhs, const QuadExt& rhs) { return lhs /= rhs; }

  friend bool operator==(const QuadExt&, const QuadExt&) = default;

  /// Approximation for display only; never used for a verdict.
  double to_double() const;

 private:
  void canonicalize();
  void require_same_field(const QuadExt& other) const;

  Rational a_;
  Rational b_;
  Integer d_ = 0;
};

/// Exact comparison of two values that may live in different quadratic
/// fields. Returns -1, 0 or +1 for x < y, x == y, x > y.
int compare_cross(const QuadExt& x, const QuadExt& y);

inline bool operator<(const QuadExt& x, const QuadExt& y) { return compare_cross(x, y) < 0; }
inline bool operator>(const QuadExt& x, const QuadExt& y) { return compare_cross(x, y) > 0; }
inline bool operator<=(const QuadExt& x, const QuadExt& y) { return compare_cross(x, y) <= 0; }
inline bool operator>=(const QuadExt& x, const QuadExt& y) { return compare_cross(x, y) >= 0; }

Integer floor(const QuadExt& x);

/// Smallest positive real root of A x^2 - 2 B x + C = 0.
///
/// Linear case A = 0 gives C / (2B) and needs B > 0. Otherwise the root is
/// (B - sqrt(B^2 - AC)) / A, which is the smallest positive root for both signs of A.
/// Throws DomainError when the discriminant is negative or no positive root exists.
QuadExt min_root_quadratic(const Integer& A, const Integer& B, const Integer& C);

/// Rational numbers lower <= x <= upper taken from the continued-fraction
/// convergents of x, with upper - lower <= max_width. Both are strict for
/// irrational x; for rational x both equal x.
struct RationalBracket {
  Rational lower;
  Rational upper;
};
RationalBracket rational_bracket(const QuadExt& x, const Rational& max_width);

/// "a + b*sqrt(d)" with exact rationals; "a" when rational.
std::string to_string(const QuadExt& x);
QuadExt parse_quad(std::string_view text);

/// Decimal rendering with the given number of significant digits (display only).
std::string to_decimal(const QuadExt& x, int digits = 12);

}  // namespace hypcert
