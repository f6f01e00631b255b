#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hypcert {

/// Sorted identifiers of the blown-up points; the basis of the exceptional
/// part of the Picard lattice.
using PointUniverse = std::vector<std::string>;

/// A plane curve D_i of the boundary.
struct Component {
  int degree = 1;
  /// Paired with a curve B_i; the blow-up then contains degree^2 points of D_i.
  bool paired = false;
  /// deg B_i (defaults to degree); D_i meets B_i transversally in degree * pairing_degree points.
  int pairing_degree = 0;
  /// The extra hyperplane component H.
  bool hyperplane = false;

  friend bool operator==(const Component&, const Component&) = default;
};

enum class PointOrigin { pairing, padding, given };

struct BlownPoint {
  std::string id;
  /// Indices of the components through the point (at most one).
  std::vector<std::size_t> incident;
  PointOrigin origin = PointOrigin::given;

  friend bool operator==(const BlownPoint&, const BlownPoint&) = default;
};

/// Input description of a surface, before validation and padding.
struct SurfaceSpec {
  std::vector<Component> components;
  bool hyperplane = false;
  std::optional<std::vector<BlownPoint>> points;
  /// Non-blown points of X where several components pass; each entry lists component indices.
  std::vector<std::vector<std::size_t>> meeting_points;

  friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

/// Validated blow-up of the plane at finitely many points lying on the
/// boundary components. Immutable once built.
class SurfaceConfig {
 public:
  /// Validates the spec, appends the hyperplane component, generates the
  /// transversal pairing points and pads every paired component to degree^2 points.
  /// Throws ConfigError on inconsistent input.
  static SurfaceConfig build(const SurfaceSpec& spec);

  /// The plane itself with the given boundary components and no blown points.
  static SurfaceConfig plane(std::vector<Component> components);

  const SurfaceSpec& spec() const { return spec_; }
  const std::vector<Component>& components() const { return components_; }
  std::size_t component_count() const { return components_.size(); }
  const std::vector<BlownPoint>& points() const { return points_; }
  const std::shared_ptr<const PointUniverse>& universe() const { return universe_; }
  bool padded() const { return padded_; }

  /// Identifiers of the blown points on component i.
  std::vector<std::string> points_on(std::size_t component) const;
  /// Blown points that lie on no component.
  std::vector<std::string> free_points() const;

  /// No three components pass through a common point of X.
  bool no_three_meet() const;

 private:
  SurfaceSpec spec_;
  std::vector<Component> components_;
  std::vector<BlownPoint> points_;
  std::shared_ptr<const PointUniverse> universe_;
  bool padded_ = false;
};

}  // namespace hypcert
