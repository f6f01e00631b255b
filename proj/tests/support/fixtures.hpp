#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hypcert/positivity.hpp"
#include "hypcert/surface_config.hpp"

namespace fixture {

/// Three lines each through one blown point, plus the hyperplane line.
inline hypcert::SurfaceConfig corollary() {
  hypcert::SurfaceSpec spec;
  spec.components = {{1}, {1}, {1}};
  spec.hyperplane = true;
  spec.points = std::vector<hypcert::BlownPoint>{{"Q1", {0}}, {"Q2", {1}}, {"Q3", {2}}};
  return hypcert::SurfaceConfig::build(spec);
}

inline hypcert::WeightedBoundary corollary_weights(const hypcert::SurfaceConfig& cfg) {
  return hypcert::WeightedBoundary(cfg, {4, 4, 4, 3});
}

/// The plane with a single boundary line.
inline hypcert::SurfaceConfig plane_line() { return hypcert::SurfaceConfig::plane({hypcert::Component{1}}); }

inline std::string data_path(const std::string& name) { return std::string(HYPCERT_DATA_DIR) + "/" + name; }

}  // namespace fixture

#include <random>

namespace fixture {

/// Random boundary: 2..4 curves of degree <= 4, each paired with probability 1/2,
/// optionally plus the hyperplane line.
inline hypcert::SurfaceConfig random_config(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 3), degree(1, 4), coin(0, 1);
  hypcert::SurfaceSpec spec;
  const int r = count(rng);
  for (int i = 0; i < r; ++i) {
    hypcert::Component c;
    c.degree = degree(rng);
    c.paired = coin(rng) == 1;
    spec.components.push_back(c);
  }
  spec.hyperplane = r == 1 || coin(rng) == 1;
  return hypcert::SurfaceConfig::build(spec);
}

/// Integer weights in [1, cap]. Half of the draws are uniform; the other half
/// perturb weights proportional to 1/degree, which pass far more often.
inline std::vector<hypcert::Rational> random_weights(std::mt19937_64& rng, const hypcert::SurfaceConfig& cfg,
                                                     long cap = 50) {
  std::vector<hypcert::Rational> w;
  if (rng() % 2 == 0) {
    std::uniform_int_distribution<long> u(1, cap);
    for (std::size_t i = 0; i < cfg.component_count(); ++i) w.emplace_back(u(rng));
    return w;
  }
  std::uniform_int_distribution<long> base(4, 12), jitter(-3, 3);
  const long c = base(rng) * 12;
  for (const auto& comp : cfg.components()) {
    long p = c / comp.degree / 4 + jitter(rng);
    if (comp.hyperplane) p = 3 * c / 16 + jitter(rng);
    w.emplace_back(std::clamp(p, 1L, cap));
  }
  return w;
}

}  // namespace fixture
