#include "hypcert/positivity.hpp"

#include "hypcert/errors.hpp"

namespace hypcert {

Multiplicity::Multiplicity(Integer m) : value_(std::move(m)) {
  if (value_ < 1) throw DomainError("orbifold multiplicity must be >= 1");
}

Multiplicity Multiplicity::infinite() {
  Multiplicity m;
  m.infinite_ = true;
  m.value_ = 0;
  return m;
}

const Integer& Multiplicity::value() const {
  if (infinite_) throw DomainError("infinite multiplicity has no finite value");
  return value_;
}

Rational Multiplicity::coefficient() const { return infinite_ ? Rational(1) : Rational(1 - Rational(1, value_)); }

Rational Multiplicity::reciprocal() const { return infinite_ ? Rational(0) : Rational(1, value_); }

std::string to_string(const Multiplicity& m) { return m.is_infinite() ? "inf" : m.value().get_str(); }

Multiplicity parse_multiplicity(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "\xE2\x88\x9E") return Multiplicity::infinite();
  Rational q = parse_rational(text);
  if (q.get_den() != 1) throw ConfigError("multiplicity must be an integer or 'inf'");
  if (q < 1) throw ConfigError("multiplicity must be >= 1");
  return Multiplicity(q.get_num());
}

WeightedBoundary::WeightedBoundary(const SurfaceConfig& cfg, std::vector<Rational> weights)
    : weights_(std::move(weights)) {
  if (weights_.size() != cfg.component_count()) {
    throw ConfigError("expected " + std::to_string(cfg.component_count()) + " weights, got " +
                      std::to_string(weights_.size()));
  }
  for (const auto& w : weights_) {
    if (w <= 0) throw ConfigError("weights must be strictly positive");
    mpz_lcm(denominator_.get_mpz_t(), denominator_.get_mpz_t(), w.get_den_mpz_t());
  }
  scaled_ = DivisorClass(cfg.universe(), 0);
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    Integer k = weights_[i].get_num() * (denominator_ / weights_[i].get_den());
    scaled_ += k * strict_transform(cfg, i);
  }
}

const DivisorClass& WeightedBoundary::integral_class() const {
  if (!integral()) throw DomainError("weights are not integral");
  return scaled_;
}

namespace {

AmplenessVerdict evaluate(const SurfaceConfig& cfg, const DivisorClass& d, const Integer& scale) {
  // d = scale * D; every check is reported for D itself.
  AmplenessVerdict verdict;
  auto add = [&](std::string name, Rational value, std::string witness) {
    value.canonicalize();
    const bool ok = value > 0;
    if (!ok && verdict.failing.empty()) verdict.failing = name;
    verdict.checks.push_back({std::move(name), std::move(value), ok, std::move(witness)});
  };

  add("self_intersection", make_rational(intersect(d, d), Integer(scale * scale)), "");

  if (!cfg.points().empty()) {
    std::string argmin;
    Integer best;
    for (const auto& p : cfg.points()) {
      Integer m = d.e(p.id);
      if (argmin.empty() || m < best) {
        best = m;
        argmin = p.id;
      }
    }
    add("exceptional", make_rational(best, scale), argmin);
  }

  if (cfg.component_count() > 0) {
    std::size_t argmin = 0;
    Integer best;
    for (std::size_t i = 0; i < cfg.component_count(); ++i) {
      Integer v = intersect(d, strict_transform(cfg, i));
      if (i == 0 || v < best) {
        best = v;
        argmin = i;
      }
    }
    add("components", make_rational(best, scale), std::to_string(argmin));
  }

  Integer residue = d.h();
  for (std::size_t i = 0; i < cfg.component_count(); ++i) {
    Integer worst = 0;
    for (const auto& id : cfg.points_on(i)) {
      Integer m = d.e(id);
      if (m > worst) worst = m;
    }
    residue -= cfg.components()[i].degree * worst;
  }
  for (const auto& id : cfg.free_points()) {
    Integer m = d.e(id);
    if (m > 0) residue -= m;
  }
  add("bezout_residue", make_rational(residue, scale), "");

  verdict.certified = verdict.failing.empty();
  return verdict;
}

}  // namespace

AmplenessVerdict ample_sufficient(const SurfaceConfig& cfg, const DivisorClass& d) {
  return evaluate(cfg, d, Integer(1));
}

AmplenessVerdict ample_sufficient(const SurfaceConfig& cfg, const WeightedBoundary& wb) {
  return evaluate(cfg, wb.scaled_class(), wb.denominator());
}

BignessVerdict orbifold_canonical_big(const SurfaceConfig& cfg, const std::vector<Multiplicity>& m) {
  if (m.size() != cfg.component_count()) {
    throw ConfigError("expected one multiplicity per component");
  }
  BignessVerdict v;
  v.plane_degree = -3;
  for (std::size_t i = 0; i < m.size(); ++i) {
    v.plane_degree += m[i].coefficient() * cfg.components()[i].degree;
  }
  v.certified = v.plane_degree > 0;
  return v;
}

}  // namespace hypcert
