#include "hypcert/cz_certifier.hpp"

#include "hypcert/errors.hpp"

namespace hypcert {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Verdict parse_verdict(std::string_view text) {
  if (text == "pass") return Verdict::pass;
  if (text == "fail") return Verdict::fail;
  if (text == "inconclusive") return Verdict::inconclusive;
  throw ConfigError("unknown verdict '" + std::string(text) + "'");
}

namespace {

struct Pairings {
  Integer scale;       // L, with L * D_p integral
  Integer dp_sq;       // (L D_p)^2
  Integer dp_dot;      // (L D_p) . D~_i
  Integer self;        // D~_i^2
};

Pairings pairings(const SurfaceConfig& cfg, const WeightedBoundary& wb, std::size_t i) {
  if (i >= cfg.component_count()) throw ConfigError("component index out of range");
  const DivisorClass di = strict_transform(cfg, i);
  const DivisorClass& dp = wb.scaled_class();
  return {wb.denominator(), intersect(dp, dp), intersect(dp, di), intersect(di, di)};
}

QuadExt xi_from(const Pairings& p) {
  // With y = L x the equation becomes D_i^2 y^2 - 2 (L D_p.D_i) y + (L D_p)^2 = 0.
  return min_root_quadratic(p.self, p.dp_dot, p.dp_sq) / QuadExt(Rational(p.scale));
}

}  // namespace

QuadExt xi(const SurfaceConfig& cfg, const WeightedBoundary& wb, std::size_t i) {
  return xi_from(pairings(cfg, wb, i));
}

ComponentRecord component_record(const SurfaceConfig& cfg, const WeightedBoundary& wb, std::size_t i) {
  const Pairings p = pairings(cfg, wb, i);
  ComponentRecord r;
  r.index = i;
  r.weight = wb.weights()[i];
  r.self_intersection = p.self;
  Rational scale(p.scale);
  const Rational dp_sq = Rational(p.dp_sq) / (scale * scale);
  r.dp_dot = Rational(p.dp_dot) / scale;
  r.xi = xi_from(p);

  const QuadExt x = r.xi;
  const QuadExt x2 = x * x;
  r.cz_margin = QuadExt(Rational(2 * dp_sq)) * x - QuadExt(r.dp_dot) * x2 - QuadExt(Rational(3 * dp_sq * r.weight));
  r.cz_inequality_holds = r.cz_margin.sign() > 0;

  r.beta = (QuadExt(Rational(dp_sq * 2 / 3)) * x - QuadExt(Rational(r.dp_dot / 3)) * x2) / QuadExt(dp_sq);
  r.beta_exceeds_p = compare_cross(r.beta, QuadExt(r.weight)) > 0;
  if (r.cz_inequality_holds && !r.beta_exceeds_p) {
    throw InvariantError("component " + std::to_string(i) + ": CZ inequality holds but beta <= p");
  }
  return r;
}

bool cz_inequality(const SurfaceConfig& cfg, const WeightedBoundary& wb, std::size_t i) {
  return component_record(cfg, wb, i).cz_inequality_holds;
}

QuadExt beta_lower(const SurfaceConfig& cfg, const WeightedBoundary& wb, std::size_t i) {
  return component_record(cfg, wb, i).beta;
}

EpsilonValue epsilon(const std::vector<ComponentRecord>& records) {
  if (records.empty()) throw DomainError("epsilon of an empty component list");
  EpsilonValue best;
  bool first = true;
  for (const auto& r : records) {
    QuadExt e = (r.beta - QuadExt(r.weight)) / QuadExt(r.weight);
    if (first || compare_cross(e, best.exact) < 0) {
      best.exact = e;
      best.component = r.index;
      first = false;
    }
  }
  if (best.exact.sign() <= 0) {
    throw DomainError("epsilon = " + to_string(best.exact) + " is not positive");
  }
  if (best.exact.is_rational()) {
    best.lower_bound = best.exact.rational_part();
  } else {
    Rational width(1, Integer("1000000000000000000"));
    for (;;) {
      auto bracket = rational_bracket(best.exact, width);
      if (bracket.lower > 0) {
        best.lower_bound = bracket.lower;
        break;
      }
      width /= 1000000;
    }
  }
  return best;
}

CZReport evaluate_cz(const SurfaceConfig& cfg, const WeightedBoundary& wb, const CZOptions& options) {
  CZReport report;
  const DivisorClass& dp = wb.scaled_class();
  report.dp_squared = make_rational(intersect(dp, dp), Integer(wb.denominator() * wb.denominator()));

  report.hypotheses.push_back(
      {"no_three_meet", cfg.no_three_meet() ? Verdict::pass : Verdict::fail,
       cfg.no_three_meet() ? "" : "three or more components share a point"});

  report.ampleness = ample_sufficient(cfg, wb);
  report.hypotheses.push_back({"ampleness", report.ampleness.certified ? Verdict::pass : Verdict::inconclusive,
                               report.ampleness.certified ? "" : "check '" + report.ampleness.failing + "' not positive"});

  HypothesisResult cz{"cz_inequality", Verdict::pass, ""};
  try {
    for (std::size_t i = 0; i < cfg.component_count(); ++i) {
      report.components.push_back(component_record(cfg, wb, i));
      const auto& r = report.components.back();
      if (report.ampleness.certified) {
        // Hodge index: (D_p.D_i)^2 >= D_i^2 D_p^2 for ample D_p.
        if (r.dp_dot * r.dp_dot < report.dp_squared * r.self_intersection) {
          throw InvariantError("Hodge index inequality violated for component " + std::to_string(i));
        }
      }
      if (!r.cz_inequality_holds && cz.status == Verdict::pass) {
        cz.status = Verdict::fail;
        cz.detail = "fails for component " + std::to_string(i);
      }
    }
  } catch (const DomainError& e) {
    report.components.clear();
    cz.status = Verdict::inconclusive;
    cz.detail = e.what();
  }
  if (cfg.component_count() == 0) {
    cz.status = Verdict::fail;
    cz.detail = "no boundary components";
  }
  report.hypotheses.push_back(cz);

  const bool enough = cfg.component_count() >= 2;
  report.hypotheses.push_back(
      {"component_count",
       enough || !options.require_two_components ? Verdict::pass : Verdict::fail,
       enough ? "" : "boundary has " + std::to_string(cfg.component_count()) + " component(s)"});

  bool any_fail = false;
  bool any_inconclusive = false;
  for (const auto& h : report.hypotheses) {
    if (h.status != Verdict::pass && report.first_failure.empty()) report.first_failure = h.name;
    any_fail |= h.status == Verdict::fail;
    any_inconclusive |= h.status == Verdict::inconclusive;
  }
  report.overall = any_fail ? Verdict::fail : any_inconclusive ? Verdict::inconclusive : Verdict::pass;

  if (report.overall == Verdict::pass) {
    EpsilonValue eps = epsilon(report.components);
    report.epsilon = eps.exact;
    report.epsilon_lower_bound = eps.lower_bound;
    report.epsilon_component = eps.component;
  }
  return report;
}

}  // namespace hypcert
