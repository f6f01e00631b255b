#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hypcert/cz_certifier.hpp"

namespace hypcert {

/// Weights c/d_i on three paired components and 3c/4 on the hyperplane, c = 4 d1 d2 d3.
/// Requires exactly three paired components followed by the hyperplane component.
WeightedBoundary ansatz_weights(const SurfaceConfig& cfg);

enum class Objective { min_sum, max_epsilon };

struct SearchOptions {
  long bound = 8;
  Objective objective = Objective::min_sum;
  /// Keep only the best k vectors.
  std::optional<std::size_t> top;
  /// Skip prefixes whose ampleness fails monotonically. Only applied when the
  /// component Gram matrix is entrywise nonnegative, where ampleness is monotone.
  bool prune = true;
  unsigned threads = 1;
  CZOptions cz;
};

struct SearchHit {
  std::vector<long> weights;
  QuadExt epsilon;

  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

/// All integer weight vectors in [1, bound]^r passing the full checklist,
/// sorted by the objective with lexicographic tie-break.
std::vector<SearchHit> search(const SurfaceConfig& cfg, const SearchOptions& options);

/// True when pruning by ampleness monotonicity is sound for this configuration.
bool ampleness_monotone(const SurfaceConfig& cfg);

WeightedBoundary to_boundary(const SurfaceConfig& cfg, const std::vector<long>& weights);

}  // namespace hypcert
