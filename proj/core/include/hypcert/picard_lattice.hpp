#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>

#include "hypcert/rational.hpp"
#include "hypcert/surface_config.hpp"

namespace hypcert {

/// Class h*H - sum_Q m_Q E_Q in the Picard lattice of a blow-up of the plane.
///
/// The stored exceptional coefficients are the m_Q, so effective strict
/// transforms have nonnegative entries. Zero entries are never stored, which
/// makes equality structural.
class DivisorClass {
 public:
  DivisorClass() = default;
  DivisorClass(std::shared_ptr<const PointUniverse> universe, Integer h,
               std::map<std::string, Integer> exceptional = {});

  static DivisorClass hyperplane(std::shared_ptr<const PointUniverse> universe = nullptr);
  /// The exceptional curve E_Q (stored coefficient -1).
  static DivisorClass exceptional(std::shared_ptr<const PointUniverse> universe, const std::string& point);

  const Integer& h() const { return h_; }
  const std::map<std::string, Integer>& e() const { return e_; }
  Integer e(const std::string& point) const;
  const std::shared_ptr<const PointUniverse>& universe() const { return universe_; }
  bool is_zero() const { return h_ == 0 && e_.empty(); }

  DivisorClass& operator+=(const DivisorClass& rhs);
  DivisorClass& operator-=(const DivisorClass& rhs);
  DivisorClass& operator*=(const Integer& k);
  DivisorClass operator-() const;

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Integer& k, DivisorClass a) { return a *= k; }
  friend DivisorClass operator*(DivisorClass a, const Integer& k) { return a *= k; }

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.h_ == b.h_ && a.e_ == b.e_;
  }

 private:
  void adopt_universe(const DivisorClass& other);

  std::shared_ptr<const PointUniverse> universe_;
  Integer h_ = 0;
  std::map<std::string, Integer> e_;
};

/// a.h * b.h - sum_Q a.e[Q] * b.e[Q]. Throws ConfigError for classes over different blow-ups.
Integer intersect(const DivisorClass& a, const DivisorClass& b);

/// K = -3H + sum_Q E_Q.
DivisorClass canonical_class(const SurfaceConfig& cfg);
DivisorClass canonical_class(const std::shared_ptr<const PointUniverse>& universe);

/// Euler characteristic 1 + d.(d - K)/2 of a line bundle on the rational surface
/// the class lives on (always an integer).
Rational chi(const DivisorClass& d);

/// d_i H - sum of E_Q over the blown points on component i.
DivisorClass strict_transform(const SurfaceConfig& cfg, std::size_t component);

std::string to_string(const DivisorClass& d);

}  // namespace hypcert
