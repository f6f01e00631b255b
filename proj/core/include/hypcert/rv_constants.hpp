#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hypcert/cz_certifier.hpp"

namespace hypcert {

/// Certified information about h^0 of a line bundle on the blow-up.
struct H0Bound {
  /// Always a valid lower bound for h^0.
  Rational lower;
  /// h^0 itself, present when h^1 = h^2 = 0 is certified by Kodaira vanishing.
  std::optional<Rational> exact;
};

/// h^0(d) from Riemann-Roch with vanishing guards.
///   h^2 guard  (K - d).A < 0 for a nef class A: K - d is not effective, so
///              h^0 >= chi and lower = max(0, chi).
///   h^1 guard  d - K passes ample_sufficient: h^1 = h^2 = 0 and h^0 = chi.
/// Without either guard only lower = 0 is certified.
H0Bound h0_certified(const SurfaceConfig& cfg, const DivisorClass& d, const DivisorClass& polarization);

/// Sum over m = 1..floor(xi_i N) of certified lower bounds for h^0(N D_p - m D~_i).
/// D_p must have integral weights.
Rational sum_h0_lower(const SurfaceConfig& cfg, const WeightedBoundary& wb, std::size_t i, long N);

struct ConstantsChain {
  long N = 0;
  Integer b;
  /// h^0(N D_p), certified exactly.
  Integer M;
  std::vector<Rational> sum_h0_lower;
  /// epsilon used inside the constant choice (half the target).
  Rational eps_inner;
  /// max_i beta_i N M / sum_i and the attaining component.
  QuadExt ratio;
  std::size_t ratio_component = 0;
  /// (1 + eps_inner) / (M N)
  Rational C;
  /// Rational bounds used for the irrational betas.
  Rational beta_min_lower;
  Rational beta_sum_upper;
  /// Upper bound of C M (M - 1) / (2 min_j beta_j).
  Rational Q;
  /// Least integer with (Q / m0) * sum beta_j < eps_inner.
  Integer m0;

  friend bool operator==(const ConstantsChain&, const ConstantsChain&) = default;
};

struct ChainOptions {
  long max_N = 500;
  unsigned threads = 1;
};

struct ChainResult {
  std::optional<ConstantsChain> chain;
  /// Why no chain was found below the cap.
  std::string reason;
};

/// Smallest N (then smallest b) satisfying
///   (1 + 2/b) max_i beta_i N M / sum_{m>=1} h^0(N D_p - m D_i) < 1 + eps_target/2
/// with certified h^0 values, followed by C, Q and the multiplicity threshold m0.
/// Requires a passing report and 0 < eps_target <= its epsilon lower bound.
ChainResult find_Nb(const SurfaceConfig& cfg, const WeightedBoundary& wb, const CZReport& report,
                    const Rational& eps_target, const ChainOptions& options = {});

/// Re-derives every quantity of the chain through direct lattice evaluation and
/// checks the defining inequalities, Q and m0 minimality. Returns an empty string
/// on success, otherwise a description of the first discrepancy.
std::string verify_chain(const SurfaceConfig& cfg, const WeightedBoundary& wb, const CZReport& report,
                         const Rational& eps_target, const ConstantsChain& chain);

}  // namespace hypcert
