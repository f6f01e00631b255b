#include "hypcert/surface_config.hpp"

#include <algorithm>
#include <set>

#include "hypcert/errors.hpp"

namespace hypcert {

namespace {

std::string component_name(std::size_t i) { return "component " + std::to_string(i); }

}  // namespace

SurfaceConfig SurfaceConfig::build(const SurfaceSpec& spec) {
  SurfaceConfig cfg;
  cfg.spec_ = spec;
  cfg.components_ = spec.components;
  for (auto& c : cfg.components_) {
    if (c.hyperplane) throw ConfigError("hyperplane components are added through the 'hyperplane' flag");
  }
  if (spec.hyperplane) {
    cfg.components_.push_back(Component{1, false, 0, true});
  }
  for (std::size_t i = 0; i < cfg.components_.size(); ++i) {
    auto& c = cfg.components_[i];
    if (c.degree < 1) throw ConfigError(component_name(i) + ": degree must be a positive integer");
    if (c.paired) {
      if (c.pairing_degree == 0) c.pairing_degree = c.degree;
      if (c.pairing_degree < 1 || c.pairing_degree > c.degree) {
        throw ConfigError(component_name(i) + ": pairing degree must lie in [1, degree]");
      }
    } else if (c.pairing_degree != 0) {
      throw ConfigError(component_name(i) + ": pairing degree given for an unpaired component");
    }
  }

  std::vector<BlownPoint> points;
  if (spec.points) {
    points = *spec.points;
    for (auto& p : points) p.origin = PointOrigin::given;
  } else {
    for (std::size_t i = 0; i < cfg.components_.size(); ++i) {
      const auto& c = cfg.components_[i];
      if (!c.paired) continue;
      const int transversal = c.degree * c.pairing_degree;
      for (int k = 1; k <= transversal; ++k) {
        points.push_back({"B" + std::to_string(i) + "." + std::to_string(k), {i}, PointOrigin::pairing});
      }
    }
  }

  std::set<std::string> seen;
  std::vector<int> on_component(cfg.components_.size(), 0);
  for (auto& p : points) {
    if (p.id.empty()) throw ConfigError("blown point with an empty identifier");
    if (!seen.insert(p.id).second) throw ConfigError("duplicate blown point '" + p.id + "'");
    std::sort(p.incident.begin(), p.incident.end());
    p.incident.erase(std::unique(p.incident.begin(), p.incident.end()), p.incident.end());
    for (auto i : p.incident) {
      if (i >= cfg.components_.size()) {
        throw ConfigError("point '" + p.id + "' refers to missing " + component_name(i));
      }
      ++on_component[i];
    }
    if (p.incident.size() > 1) {
      throw ConfigError("point '" + p.id + "' lies on several components; blown points must be in general position");
    }
  }

  for (std::size_t i = 0; i < cfg.components_.size(); ++i) {
    const auto& c = cfg.components_[i];
    if (!c.paired) continue;
    const int wanted = c.degree * c.degree;
    if (on_component[i] > wanted) {
      throw ConfigError(component_name(i) + ": " + std::to_string(on_component[i]) +
                        " blown points exceed degree^2 = " + std::to_string(wanted));
    }
    for (int k = on_component[i] + 1; k <= wanted; ++k) {
      std::string id = "P" + std::to_string(i) + "." + std::to_string(k);
      if (!seen.insert(id).second) throw ConfigError("padding identifier '" + id + "' already in use");
      points.push_back({id, {i}, PointOrigin::padding});
      cfg.padded_ = true;
    }
  }

  for (const auto& m : spec.meeting_points) {
    for (auto i : m) {
      if (i >= cfg.components_.size()) throw ConfigError("meeting point refers to missing " + component_name(i));
    }
  }

  cfg.points_ = std::move(points);
  PointUniverse ids;
  ids.reserve(cfg.points_.size());
  for (const auto& p : cfg.points_) ids.push_back(p.id);
  std::sort(ids.begin(), ids.end());
  cfg.universe_ = std::make_shared<const PointUniverse>(std::move(ids));
  return cfg;
}

SurfaceConfig SurfaceConfig::plane(std::vector<Component> components) {
  SurfaceSpec spec;
  for (auto& c : components) c.paired = false;
  spec.components = std::move(components);
  spec.points = std::vector<BlownPoint>{};
  return build(spec);
}

std::vector<std::string> SurfaceConfig::points_on(std::size_t component) const {
  std::vector<std::string> out;
  for (const auto& p : points_) {
    if (std::find(p.incident.begin(), p.incident.end(), component) != p.incident.end()) out.push_back(p.id);
  }
  return out;
}

std::vector<std::string> SurfaceConfig::free_points() const {
  std::vector<std::string> out;
  for (const auto& p : points_) {
    if (p.incident.empty()) out.push_back(p.id);
  }
  return out;
}

bool SurfaceConfig::no_three_meet() const {
  for (const auto& m : spec_.meeting_points) {
    std::set<std::size_t> distinct(m.begin(), m.end());
    if (distinct.size() >= 3) return false;
  }
  return true;
}

}  // namespace hypcert
