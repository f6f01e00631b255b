#pragma once

#include <string>
#include <string_view>

#include "hypcert/rational.hpp"

namespace hypcert {

/// Orbifold multiplicity m in {1, 2, ...} or infinity, with coefficient 1 - 1/m.
class Multiplicity {
 public:
  Multiplicity() : value_(1) {}
  explicit Multiplicity(Integer m);
  explicit Multiplicity(long m) : Multiplicity(Integer(m)) {}
  static Multiplicity infinite();

  bool is_infinite() const { return infinite_; }
  /// Finite value; throws DomainError for infinity.
  const Integer& value() const;
  /// 1 - 1/m, equal to 1 for infinity.
  Rational coefficient() const;
  /// 1/m, equal to 0 for infinity.
  Rational reciprocal() const;

  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
  friend bool operator<(const Multiplicity& a, const Multiplicity& b) {
    if (a.infinite_ || b.infinite_) return !a.infinite_ && b.infinite_;
    return a.value_ < b.value_;
  }

 private:
  bool infinite_ = false;
  Integer value_;
};

/// "inf" for infinity, decimal otherwise.
std::string to_string(const Multiplicity& m);
Multiplicity parse_multiplicity(std::string_view text);

}  // namespace hypcert
