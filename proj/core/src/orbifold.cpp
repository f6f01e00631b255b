#include "hypcert/orbifold.hpp"

#include "hypcert/errors.hpp"

namespace hypcert {

OrbifoldDivisor::OrbifoldDivisor(const std::vector<Multiplicity>& per_component) {
  for (std::size_t j = 0; j < per_component.size(); ++j) set(j, per_component[j]);
}

void OrbifoldDivisor::set(std::size_t component, const Multiplicity& m) {
  if (!m.is_infinite() && m.value() == 1) {
    m_.erase(component);
  } else {
    m_[component] = m;
  }
}

Multiplicity OrbifoldDivisor::multiplicity(std::size_t component) const {
  auto it = m_.find(component);
  return it == m_.end() ? Multiplicity(1) : it->second;
}

Integer ProfilePoint::total() const {
  Integer s = 0;
  for (const auto& [j, tij] : t) s += tij;
  return s;
}

Integer PullbackProfile::degree(std::size_t component) const {
  Integer s = 0;
  for (const auto& p : points) {
    auto it = p.t.find(component);
    if (it != p.t.end()) s += it->second;
  }
  return s;
}

void PullbackProfile::validate(const OrbifoldDivisor& delta) const {
  for (const auto& p : points) {
    if (p.t.empty()) throw DomainError("profile point " + p.id + " lies on no boundary component");
    for (const auto& [j, tij] : p.t) {
      if (tij <= 0) throw DomainError("profile point " + p.id + ": multiplicities must be positive");
      if (!delta.in_support(j)) {
        throw DomainError("profile point " + p.id + " meets component " + std::to_string(j) +
                          " outside the orbifold support");
      }
    }
  }
}

std::vector<Multiplicity> induced_multiplicities(const PullbackProfile& profile, const OrbifoldDivisor& delta) {
  profile.validate(delta);
  std::vector<Multiplicity> out;
  out.reserve(profile.points.size());
  for (const auto& p : profile.points) {
    const Integer t = p.total();
    Multiplicity best(1);
    for (const auto& [j, tij] : p.t) {
      const Multiplicity m = delta.multiplicity(j);
      if (m.is_infinite()) {
        best = m;
        break;
      }
      Multiplicity cand(ceil(make_rational(m.value(), t)));
      if (best < cand) best = cand;
    }
    out.push_back(best);
  }
  return out;
}

bool is_orbifold_morphism(const PullbackProfile& profile, const OrbifoldDivisor& delta,
                          const std::vector<Multiplicity>& curve) {
  profile.validate(delta);
  if (curve.size() != profile.points.size()) {
    throw DomainError("curve structure has " + std::to_string(curve.size()) + " entries for " +
                      std::to_string(profile.points.size()) + " points");
  }
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const Integer t = profile.points[i].total();
    for (const auto& [j, tij] : profile.points[i].t) {
      const Multiplicity m = delta.multiplicity(j);
      if (curve[i].is_infinite()) continue;
      if (m.is_infinite()) return false;
      if (curve[i].value() * t < m.value()) return false;
    }
  }
  return true;
}

OrbifoldBound orbifold_bound_chain(const PullbackProfile& profile, const OrbifoldDivisor& delta) {
  const auto induced = induced_multiplicities(profile, delta);
  OrbifoldBound b;
  b.lhs = Rational(static_cast<long>(profile.points.size()));
  b.rhs = 0;
  for (const auto& m : induced) b.rhs += m.coefficient();
  for (const auto& [j, m] : delta.support()) b.rhs += Rational(profile.degree(j)) * m.reciprocal();
  b.holds = b.lhs <= b.rhs;
  return b;
}

namespace {

std::vector<Rational> twisted_weights(const WeightedBoundary& wb, const Rational& s, const OrbifoldDivisor& delta) {
  std::vector<Rational> w = wb.weights();
  for (const auto& [j, m] : delta.support()) {
    if (j >= w.size()) throw DomainError("orbifold component " + std::to_string(j) + " out of range");
    w[j] -= s;
  }
  return w;
}

}  // namespace

bool twist_passes(const SurfaceConfig& cfg, const WeightedBoundary& wb, const Rational& alpha,
                  const OrbifoldDivisor& delta, const Integer& m) {
  if (m < 1) return false;
  const Rational s = alpha / Rational(m);
  const auto w = twisted_weights(wb, s, delta);
  for (const auto& x : w) {
    if (x <= 0) return false;
  }
  if (!ample_sufficient(cfg, WeightedBoundary(cfg, w)).certified) return false;

  // The checks other than D^2 > 0 are linear in s, so they hold on all of [0, s]
  // once they hold at both ends. D(s)^2 = a - 2 b s + c s^2 can dip in between.
  DivisorClass e(cfg.universe(), 0);
  for (const auto& [j, mult] : delta.support()) e += strict_transform(cfg, j);
  const Rational den(wb.denominator());
  const Rational a = Rational(intersect(wb.scaled_class(), wb.scaled_class())) / (den * den);
  const Rational b = Rational(intersect(wb.scaled_class(), e)) / den;
  const Rational c(intersect(e, e));
  if (c > 0) {
    const Rational vertex = b / c;
    if (vertex > 0 && vertex < s && a - b * b / c <= 0) return false;
  }
  return true;
}

Integer ample_twist_threshold(const SurfaceConfig& cfg, const WeightedBoundary& wb, const Rational& alpha,
                              const OrbifoldDivisor& delta) {
  if (alpha < 0) throw DomainError("alpha must be nonnegative");
  if (!ample_sufficient(cfg, wb).certified) throw DomainError("D_p is not certified ample");
  if (alpha == 0 || delta.support().empty()) return 1;
  Integer hi = 1;
  while (!twist_passes(cfg, wb, alpha, delta, hi)) hi *= 2;
  if (hi == 1) return 1;
  Integer lo = hi / 2;  // fails
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (twist_passes(cfg, wb, alpha, delta, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace hypcert
