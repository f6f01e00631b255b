#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypcert/config_io.hpp"
#include "hypcert/cz_certifier.hpp"
#include "hypcert/rv_constants.hpp"

namespace hypcert {

/// How a numeric certificate field relates to the quantity it names.
enum class Exactness { exact_rational, exact_quadratic, lower_bound, upper_bound, empirical };

std::string to_string(Exactness e);
Exactness parse_exactness(std::string_view text);

struct ConstantsSection {
  Rational eps_target;
  long max_N = 0;
  std::optional<ConstantsChain> chain;
  /// Why no chain is present.
  std::string note;

  friend bool operator==(const ConstantsSection&, const ConstantsSection&) = default;
};

struct OrbifoldSection {
  std::vector<Multiplicity> multiplicities;
  BignessVerdict canonical_big;
  Rational alpha;
  /// Least uniform multiplicity keeping D_p - sum (alpha/m) D~_j certified ample.
  std::optional<Integer> twist_threshold;
  std::string note;

  friend bool operator==(const OrbifoldSection&, const OrbifoldSection&) = default;
};

struct Reference {
  std::string label;
  std::string statement;

  friend bool operator==(const Reference&, const Reference&) = default;
};

struct Certificate {
  int version = 1;
  std::string generator;
  ConfigFile config;
  bool weights_from_ansatz = false;
  std::vector<Rational> weights;
  std::size_t blown_points = 0;
  Integer k_squared;
  CZReport report;
  std::optional<ConstantsSection> constants;
  std::optional<OrbifoldSection> orbifold;
  std::vector<Reference> references;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CertifyOptions {
  /// Defaults to the certified epsilon lower bound.
  std::optional<Rational> eps_target;
  long max_N = 500;
  Rational alpha = 1;
  unsigned threads = 1;
  bool constants = true;
};

/// Runs the full pipeline. Throws ConfigError for unusable input (bad spec,
/// missing weights with no applicable ansatz).
Certificate certify(const ConfigFile& config, const CertifyOptions& options = {});

/// Versioned JSON document; every number is tagged with its Exactness.
std::string serialize_certificate(const Certificate& cert);
/// Inverse of serialize_certificate. Throws ConfigError on malformed input.
Certificate parse_certificate(std::string_view text, std::string_view source = "certificate");

}  // namespace hypcert
