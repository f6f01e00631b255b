#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hypcert/multiplicity.hpp"
#include "hypcert/positivity.hpp"

namespace hypcert {

/// sum_j (1 - 1/m_j) D_j over boundary component indices. Components with
/// m = 1 have coefficient 0 and are not stored.
class OrbifoldDivisor {
 public:
  OrbifoldDivisor() = default;
  explicit OrbifoldDivisor(const std::vector<Multiplicity>& per_component);

  void set(std::size_t component, const Multiplicity& m);
  /// 1 for components outside the support.
  Multiplicity multiplicity(std::size_t component) const;
  Rational coefficient(std::size_t component) const { return multiplicity(component).coefficient(); }
  bool in_support(std::size_t component) const { return m_.count(component) != 0; }
  const std::map<std::size_t, Multiplicity>& support() const { return m_; }

  friend bool operator==(const OrbifoldDivisor&, const OrbifoldDivisor&) = default;

 private:
  std::map<std::size_t, Multiplicity> m_;
};

/// A point P_i of the source curve mapping into supp(Delta).
struct ProfilePoint {
  std::string id;
  /// t_{i,j} > 0 for every component j through the image; the keys are phi(i).
  std::map<std::size_t, Integer> t;

  /// t_i, the multiplicity of psi^*(supp Delta) at the point.
  Integer total() const;

  friend bool operator==(const ProfilePoint&, const ProfilePoint&) = default;
};

/// Pullback of the boundary under a curve psi: C -> X not contained in supp(Delta).
struct PullbackProfile {
  std::vector<ProfilePoint> points;

  /// deg psi^*Delta_j = sum_i t_{i,j}.
  Integer degree(std::size_t component) const;
  /// Throws DomainError for empty incidence, nonpositive t, or a component outside supp(Delta).
  void validate(const OrbifoldDivisor& delta) const;

  friend bool operator==(const PullbackProfile&, const PullbackProfile&) = default;
};

/// m~_i = max over j in phi(i) of ceil(m_j / t_i); infinity when some m_j is.
std::vector<Multiplicity> induced_multiplicities(const PullbackProfile& profile, const OrbifoldDivisor& delta);

/// n_i * t_i >= m_j at every point for every incident j, where n_i is the curve
/// multiplicity at P_i (infinite m_j requires infinite n_i).
bool is_orbifold_morphism(const PullbackProfile& profile, const OrbifoldDivisor& delta,
                          const std::vector<Multiplicity>& curve);

struct OrbifoldBound {
  /// N^[1] = number of points of the profile.
  Rational lhs;
  /// sum_i (1 - 1/m~_i) + sum_j deg(psi^*Delta_j) / m_j.
  Rational rhs;
  bool holds = false;
};

OrbifoldBound orbifold_bound_chain(const PullbackProfile& profile, const OrbifoldDivisor& delta);

/// Least m such that D_p - sum_{j in supp Delta} (alpha/m') D~_j passes
/// ample_sufficient for every m' >= m. D_p must itself pass; returns 1 when alpha = 0.
/// Throws DomainError when D_p is not certified ample or alpha < 0.
Integer ample_twist_threshold(const SurfaceConfig& cfg, const WeightedBoundary& wb, const Rational& alpha,
                              const OrbifoldDivisor& delta);

/// Same predicate as the threshold search, at one m (exposed for linear-scan checks).
bool twist_passes(const SurfaceConfig& cfg, const WeightedBoundary& wb, const Rational& alpha,
                  const OrbifoldDivisor& delta, const Integer& m);

}  // namespace hypcert
