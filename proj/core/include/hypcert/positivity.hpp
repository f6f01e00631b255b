#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypcert/multiplicity.hpp"
#include "hypcert/picard_lattice.hpp"
#include "hypcert/surface_config.hpp"

namespace hypcert {

/// D_p = sum_i p_i * strict_transform(i) with positive rational weights.
/// The lattice class is stored scaled by the common denominator of the weights.
class WeightedBoundary {
 public:
  WeightedBoundary(const SurfaceConfig& cfg, std::vector<Rational> weights);

  const std::vector<Rational>& weights() const { return weights_; }
  bool integral() const { return denominator_ == 1; }
  /// denominator() * D_p as an integral class.
  const DivisorClass& scaled_class() const { return scaled_; }
  const Integer& denominator() const { return denominator_; }
  /// D_p itself; throws DomainError if the weights are not integers.
  const DivisorClass& integral_class() const;

 private:
  std::vector<Rational> weights_;
  Integer denominator_ = 1;
  DivisorClass scaled_;
};

struct PositivityCheck {
  std::string name;
  Rational value;
  bool passed = false;
  /// Extra context, e.g. the point or component attaining a minimum.
  std::string witness;

  friend bool operator==(const PositivityCheck&, const PositivityCheck&) = default;
};

struct AmplenessVerdict {
  bool certified = false;
  std::vector<PositivityCheck> checks;
  /// First failing check, or empty when certified.
  std::string failing;

  friend bool operator==(const AmplenessVerdict&, const AmplenessVerdict&) = default;
};

/// Sufficient ampleness test for a class D = aH - sum m_Q E_Q. All of:
///   self_intersection   D^2 > 0
///   exceptional         D.E_Q = m_Q > 0 for every blown point
///   components          D.D~_i > 0 for every boundary component
///   bezout_residue      a - sum_i d_i max_{Q on D_i} m_Q - sum_{Q free} m_Q > 0
/// The residue bounds D.C / deg(C) from below for every other irreducible curve C,
/// since a plane curve of degree c meets D_i in at most c*d_i points counted with
/// multiplicity. Passing all four certifies ampleness by Nakai-Moishezon; failing is
/// inconclusive, not a proof of non-ampleness.
AmplenessVerdict ample_sufficient(const SurfaceConfig& cfg, const DivisorClass& d);
AmplenessVerdict ample_sufficient(const SurfaceConfig& cfg, const WeightedBoundary& wb);

struct BignessVerdict {
  bool certified = false;
  /// -3 + sum_i (1 - 1/m_i) d_i
  Rational plane_degree;

  friend bool operator==(const BignessVerdict&, const BignessVerdict&) = default;
};

/// K + sum (1 - 1/m_i) D~_i is big when its plane-level degree is positive:
/// it is then the pullback of an ample Q-divisor plus an effective exceptional part.
BignessVerdict orbifold_canonical_big(const SurfaceConfig& cfg, const std::vector<Multiplicity>& m);

}  // namespace hypcert
