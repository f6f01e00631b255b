#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypcert/ffheights.hpp"
#include "hypcert/multiplicity.hpp"
#include "hypcert/orbifold.hpp"
#include "hypcert/surface_config.hpp"

namespace hypcert {

/// Contents of a configuration document (format "hypcert-config", version 1).
struct ConfigFile {
  SurfaceSpec spec;
  /// One weight per component, hyperplane last. Absent means "use the ansatz".
  std::optional<std::vector<Rational>> weights;
  /// Orbifold multiplicities per component, hyperplane last.
  std::optional<std::vector<Multiplicity>> multiplicities;
  bool allow_single_component = false;
  /// Free-form metadata, kept as compact JSON text ("null" when absent).
  std::string metadata = "null";

  friend bool operator==(const ConfigFile&, const ConfigFile&) = default;
};

/// Throws ConfigError with a line/column (syntax) or field path (content) diagnostic.
ConfigFile parse_config(std::string_view text, std::string_view source = "config");
ConfigFile load_config(const std::filesystem::path& path);
/// Canonical JSON rendering; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ConfigFile& config);

/// Orbifold divisor together with a pullback profile.
struct ProfileFile {
  OrbifoldDivisor delta;
  PullbackProfile profile;

  friend bool operator==(const ProfileFile&, const ProfileFile&) = default;
};

ProfileFile parse_profile(std::string_view text, std::string_view source = "profile");
std::string serialize_profile(const ProfileFile& profile);

BoundaryRealization parse_realization(std::string_view text, std::string_view source = "realization");
BoundaryRealization load_realization(const std::filesystem::path& path);
std::string serialize_realization(const BoundaryRealization& r);

/// Whole file as a string; throws ConfigError when unreadable.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace hypcert
