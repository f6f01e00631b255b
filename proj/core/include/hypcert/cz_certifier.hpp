#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hypcert/positivity.hpp"
#include "hypcert/quad_field.hpp"

namespace hypcert {

enum class Verdict { pass, fail, inconclusive };

std::string to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

struct HypothesisResult {
  std::string name;
  Verdict status = Verdict::inconclusive;
  std::string detail;

  friend bool operator==(const HypothesisResult&, const HypothesisResult&) = default;
};

/// Per-component data of the Corvaja-Zannier test.
struct ComponentRecord {
  std::size_t index = 0;
  Rational weight;
  /// D~_i^2 and D_p . D~_i.
  Integer self_intersection;
  Rational dp_dot;
  /// Smallest positive root of D~_i^2 x^2 - 2 (D_p.D~_i) x + D_p^2.
  QuadExt xi;
  /// 2 D_p^2 xi - (D_p.D~_i) xi^2 - 3 D_p^2 p_i; the inequality holds iff this is positive.
  QuadExt cz_margin;
  bool cz_inequality_holds = false;
  /// Closed-form lower bound (2/3 xi D_p^2 - 1/3 (D_p.D~_i) xi^2) / D_p^2 for beta(D_p, D~_i).
  QuadExt beta;
  bool beta_exceeds_p = false;

  friend bool operator==(const ComponentRecord&, const ComponentRecord&) = default;
};

struct CZOptions {
  /// Reject boundaries with a single component (the theorem assumes r >= 2).
  bool require_two_components = true;
};

struct CZReport {
  Rational dp_squared;
  AmplenessVerdict ampleness;
  std::vector<ComponentRecord> components;
  /// min_i (beta_i - p_i) / p_i, its rational lower bound, and the attaining component.
  std::optional<QuadExt> epsilon;
  std::optional<Rational> epsilon_lower_bound;
  std::optional<std::size_t> epsilon_component;
  /// Checklist in evaluation order: no_three_meet, ampleness, cz_inequality, component_count.
  std::vector<HypothesisResult> hypotheses;
  Verdict overall = Verdict::inconclusive;
  std::string first_failure;

  friend bool operator==(const CZReport&, const CZReport&) = default;
};

QuadExt xi(const SurfaceConfig& cfg, const WeightedBoundary& wb, std::size_t i);
bool cz_inequality(const SurfaceConfig& cfg, const WeightedBoundary& wb, std::size_t i);
QuadExt beta_lower(const SurfaceConfig& cfg, const WeightedBoundary& wb, std::size_t i);

/// Full per-component record for component i. Throws DomainError when xi does not exist.
ComponentRecord component_record(const SurfaceConfig& cfg, const WeightedBoundary& wb, std::size_t i);

struct EpsilonValue {
  QuadExt exact;
  /// Equal to exact when epsilon is rational, strictly below it otherwise.
  Rational lower_bound;
  std::size_t component = 0;
};

/// Minimum of (beta_i - p_i) / p_i across components (ties go to the lowest index).
/// Throws DomainError when the minimum is not positive.
EpsilonValue epsilon(const std::vector<ComponentRecord>& records);

/// Evaluates the whole hypothesis checklist. Never throws for mathematical
/// failures; they are recorded in the report.
CZReport evaluate_cz(const SurfaceConfig& cfg, const WeightedBoundary& wb, const CZOptions& options = {});

}  // namespace hypcert
