#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "hypcert/errors.hpp"
#include "hypcert/weight_search.hpp"

using namespace hypcert;

namespace {

SurfaceConfig paired(std::vector<int> degrees) {
  SurfaceSpec spec;
  for (int d : degrees) spec.components.push_back(Component{d, true});
  spec.hyperplane = true;
  return SurfaceConfig::build(spec);
}

bool contains(const std::vector<SearchHit>& hits, const std::vector<long>& w) {
  return std::any_of(hits.begin(), hits.end(), [&](const SearchHit& h) { return h.weights == w; });
}

}  // namespace

TEST(WeightSearch, Ansatz) {
  const auto unit = paired({1, 1, 1});
  const auto wb = ansatz_weights(unit);
  EXPECT_EQ(wb.weights(), (std::vector<Rational>{4, 4, 4, 3}));
  const auto& d = wb.integral_class();
  EXPECT_EQ(intersect(d, d), 177);

  const auto mixed = paired({2, 1, 1});
  EXPECT_EQ(ansatz_weights(mixed).weights(), (std::vector<Rational>{4, 8, 8, 6}));
  EXPECT_THROW(ansatz_weights(fixture::plane_line()), ConfigError);
}

TEST(WeightSearch, CorollaryContainsAnsatz) {
  const auto cfg = fixture::corollary();
  SearchOptions o;
  o.bound = 8;
  const auto hits = search(cfg, o);
  ASSERT_FALSE(hits.empty());
  EXPECT_TRUE(contains(hits, {4, 4, 4, 3}));
  for (std::size_t k = 1; k < hits.size(); ++k) {
    long a = 0, b = 0;
    for (long x : hits[k - 1].weights) a += x;
    for (long x : hits[k].weights) b += x;
    EXPECT_LE(a, b);
  }
}

TEST(WeightSearch, PlaneLineHasNoHits) {
  const auto cfg = fixture::plane_line();
  SearchOptions o;
  o.bound = 12;
  o.cz.require_two_components = false;
  EXPECT_TRUE(search(cfg, o).empty());
}

TEST(WeightSearch, MaxEpsilonBeatsAnsatz) {
  const auto cfg = fixture::corollary();
  SearchOptions o;
  o.bound = 8;
  o.objective = Objective::max_epsilon;
  o.top = 1;
  const auto hits = search(cfg, o);
  ASSERT_EQ(hits.size(), 1u);
  const auto ansatz = evaluate_cz(cfg, fixture::corollary_weights(cfg));
  EXPECT_GE(hits.front().epsilon, *ansatz.epsilon);
}

TEST(WeightSearch, HitsRecertify) {
  const auto cfg = fixture::corollary();
  SearchOptions o;
  o.bound = 7;
  for (const auto& h : search(cfg, o)) {
    const auto report = evaluate_cz(cfg, to_boundary(cfg, h.weights));
    EXPECT_EQ(report.overall, Verdict::pass);
    EXPECT_EQ(*report.epsilon, h.epsilon);
  }
}

TEST(WeightSearch, PruningIsSound) {
  const auto cfg = fixture::corollary();
  ASSERT_TRUE(ampleness_monotone(cfg));
  for (long bound = 1; bound <= 6; ++bound) {
    SearchOptions pruned;
    pruned.bound = bound;
    SearchOptions full = pruned;
    full.prune = false;
    EXPECT_EQ(search(cfg, pruned), search(cfg, full)) << bound;
  }
  // Exhaustive reference without the search machinery at all.
  std::vector<std::vector<long>> expected;
  for (long a = 1; a <= 6; ++a)
    for (long b = 1; b <= 6; ++b)
      for (long c = 1; c <= 6; ++c)
        for (long d = 1; d <= 6; ++d) {
          if (evaluate_cz(cfg, to_boundary(cfg, {a, b, c, d})).overall == Verdict::pass) {
            expected.push_back({a, b, c, d});
          }
        }
  SearchOptions o;
  o.bound = 6;
  const auto hits = search(cfg, o);
  EXPECT_EQ(hits.size(), expected.size());
  for (const auto& w : expected) EXPECT_TRUE(contains(hits, w));
}

TEST(WeightSearch, ThreadCountDoesNotChangeResult) {
  const auto cfg = paired({2, 1, 1});
  SearchOptions one;
  one.bound = 9;
  SearchOptions four = one;
  four.threads = 4;
  EXPECT_EQ(search(cfg, one), search(cfg, four));
}
