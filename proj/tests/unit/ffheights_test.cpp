#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "hypcert/config_io.hpp"
#include "hypcert/errors.hpp"
#include "hypcert/factor.hpp"
#include "hypcert/ffheights.hpp"

using namespace hypcert;

namespace {

const Poly t = Poly::monomial(1);

/// Places where some coordinate vanishes, plus infinity.
std::vector<Place> places_of(const std::vector<Poly>& polys) {
  std::vector<Place> out{Place::infinity()};
  for (const auto& p : polys) {
    if (p.is_zero() || p.degree() == 0) continue;
    for (const auto& f : factor(p)) {
      const Place q = Place::trusted(f.poly);
      if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
    }
  }
  return out;
}

/// Height from its definition as a sum over places.
Integer height_by_places(const RatMap& x) {
  Integer h = 0;
  for (const auto& p : places_of(x.coords())) {
    int lowest = INT32_MAX;
    for (const auto& c : x.coords()) {
      if (!c.is_zero()) lowest = std::min(lowest, valuation(c, p));
    }
    h += Integer(p.degree()) * Integer(-lowest);
  }
  return h;
}

}  // namespace

TEST(Places, Basics) {
  EXPECT_EQ(Place::infinity().degree(), 1);
  EXPECT_EQ(Place::finite(t * t + 1).degree(), 2);
  EXPECT_EQ(Place::finite(Rational(3) * t - Poly(6)).poly(), t - Poly(2));
  EXPECT_THROW(Place::finite(t * t - Poly(1)), DomainError);
  EXPECT_EQ(valuation(pow(t, 3) + t, Place::infinity()), -3);
  EXPECT_EQ(valuation(pow(t, 3) + t, Place::finite(t)), 1);
  EXPECT_THROW(valuation(Poly(), Place::infinity()), DomainError);
}

TEST(Height, Examples) {
  EXPECT_EQ(height(RatMap({Poly(1), t})), 1);
  EXPECT_EQ(height(RatMap({t * t, pow(t - Poly(1), 2)})), 2);
  EXPECT_EQ(height(RatMap({Poly(3), Poly(5)})), 0);
  EXPECT_EQ(height_by_places(RatMap({t * t, pow(t - Poly(1), 2)})), 2);
  EXPECT_THROW(RatMap({Poly(), Poly()}), Error);
  EXPECT_EQ(to_string(parse_map("[t : 1]")), "[t : 1]");
}

TEST(Height, NormalizationAndInvariance) {
  std::mt19937_64 rng(79);
  for (int k = 0; k < 2000; ++k) {
    const RatMap x = random_map(rng, 1 + static_cast<int>(rng() % 3), 6, 20);
    EXPECT_EQ(Integer(height(x)), height_by_places(x));
    Poly g = random_poly(rng, static_cast<int>(rng() % 4), 9);
    if (g.is_zero()) g = Poly(2);
    std::vector<Poly> scaled;
    for (const auto& c : x.coords()) scaled.push_back(c * g);
    const RatMap y(scaled);
    EXPECT_EQ(y, x);
    EXPECT_EQ(height(y), height(x));
    EXPECT_EQ(parse_map(to_string(x)), x);
  }
}

TEST(Height, ProductFormula) {
  std::mt19937_64 rng(83);
  for (int k = 0; k < 10000; ++k) {
    const Poly a = random_poly(rng, static_cast<int>(rng() % 8), 50);
    const Poly b = random_poly(rng, static_cast<int>(rng() % 8), 50);
    if (a.is_zero() || b.is_zero()) continue;
    long total = 0;
    for (const auto& p : places_of({a, b})) total += p.degree() * (valuation(a, p) - valuation(b, p));
    ASSERT_EQ(total, 0) << to_string(a) << " / " << to_string(b);
  }
}

TEST(Weil, Examples) {
  const Form x0 = parse_form("X0", 2);
  const RatMap x({t, Poly(1)});
  EXPECT_EQ(weil_hypersurface(x0, x, Place::finite(t)), 1);
  EXPECT_EQ(weil_hypersurface(x0, x, Place::infinity()), 0);
  EXPECT_THROW(weil_hypersurface(parse_form("X0 - X1", 2), RatMap({t, t}), Place::infinity()), Error);
  EXPECT_EQ(to_string(parse_form("3/2*X0^2*X1 - X2^3", 3)), "3/2*X0^2*X1 - X2^3");
}

TEST(Counting, Examples) {
  const Form x0 = parse_form("X0", 2);
  const auto c = counting_functions(x0, RatMap({t, Poly(1)}), {Place::infinity()});
  EXPECT_EQ(c.truncated, 1);
  EXPECT_EQ(c.counting, 1);
  EXPECT_EQ(c.proximity, 0);

  const Poly sq = (t - Poly(1)) * (t + Poly(2)) * (t * t + Poly(3));
  EXPECT_EQ(counting_functions(x0, RatMap({sq, Poly(1)}), {}).truncated, 4);

  const auto cube = counting_functions(x0, RatMap({pow(t * t + Poly(1), 3), Poly(1)}), {});
  EXPECT_EQ(cube.truncated, 2);
  EXPECT_EQ(cube.counting, 6);
  EXPECT_THROW(counting_functions(x0, RatMap({t, Poly(1)}), {Place::infinity(), Place::infinity()}), DomainError);
}

TEST(Counting, FirstMainTheoremAndTruncation) {
  std::mt19937_64 rng(89);
  const std::vector<std::string> forms{"X0", "X0 + 2*X1 - X2", "X0*X1 - X2^2", "X0^3 + X1^3 - 5*X2^3"};
  for (int k = 0; k < 3000; ++k) {
    const RatMap x = random_map(rng, 2, 5, 15);
    const Form f = parse_form(forms[k % forms.size()], 3);
    if (f(x.coords()).is_zero()) continue;
    std::vector<Place> s;
    if (rng() % 2) s.push_back(Place::infinity());
    for (int j = 0; j < 2; ++j) {
      const Place p = Place::finite(t - Poly(static_cast<long>(rng() % 7) - 3));
      if (std::find(s.begin(), s.end(), p) == s.end()) s.push_back(p);
    }
    const auto c = counting_functions(f, x, s);
    ASSERT_EQ(c.proximity + c.counting, Rational(f.degree() * height(x)));
    ASSERT_LE(Rational(c.truncated), c.counting);
    ASSERT_GE(c.proximity, 0);
  }
}

TEST(Wang, Example) {
  const RatMap x({Poly(1), t, t * t});
  const std::vector<std::vector<Rational>> coord{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const auto w = wang_smt_check(x, coord, {Place::finite(t), Place::finite(t - Poly(1)), Place::infinity()});
  EXPECT_FALSE(w.skipped);
  EXPECT_TRUE(w.holds);
  EXPECT_EQ(w.rhs, Rational(3 * 2 + 3 * (3 - 2)));
  // At (t) the subset {X1, X2} gives 1 + 2; at infinity {X0, X1} gives 2 + 1; (t - 1) gives 0.
  EXPECT_EQ(w.lhs, 6);

  const auto empty = wang_smt_check(x, coord, {});
  EXPECT_EQ(empty.lhs, 0);
  EXPECT_TRUE(empty.holds);

  const auto degenerate = wang_smt_check(RatMap({Poly(1), t, t + Poly(1)}), coord, {Place::infinity()});
  EXPECT_TRUE(degenerate.skipped);
  EXPECT_FALSE(degenerate.reason.empty());
}

TEST(Wang, RankAndNondegeneracy) {
  EXPECT_EQ(rank({{1, 2, 3}, {2, 4, 6}, {0, 1, 0}}), 2);
  EXPECT_TRUE(linearly_nondegenerate(RatMap({Poly(1), t, t * t})));
  EXPECT_FALSE(linearly_nondegenerate(RatMap({t, Rational(2) * t})));
}

TEST(Stress, SmallSweepIsClean) {
  StressOptions o;
  o.samples = 3000;
  o.seed = 7;
  const auto s = stress(o);
  EXPECT_EQ(s.samples, 3000u);
  EXPECT_EQ(s.wang_violations, 0u);
  EXPECT_EQ(s.fmt_violations, 0u);
  EXPECT_LE(s.max_ratio, 1);
}

TEST(Stress, DeterministicAcrossThreads) {
  StressOptions o;
  o.samples = 400;
  o.seed = 11;
  std::vector<std::string> one, four;
  stress(o, [&](const StressSample& x) { one.push_back(std::to_string(x.index) + to_string(x.map)); });
  o.threads = 4;
  stress(o, [&](const StressSample& x) { four.push_back(std::to_string(x.index) + to_string(x.map)); });
  std::sort(one.begin(), one.end());
  std::sort(four.begin(), four.end());
  EXPECT_EQ(one, four);
}

class Probe : public ::testing::Test {
 protected:
  SurfaceConfig cfg = fixture::corollary();
  WeightedBoundary wb = fixture::corollary_weights(cfg);
  BoundaryRealization real = load_realization(fixture::data_path("corollary-realization.json"));
};

TEST_F(Probe, RealizationMatches) {
  EXPECT_NO_THROW(validate_realization(cfg, real));
  auto bad = real;
  bad.points["Q1"] = {1, 1, 1};
  EXPECT_THROW(validate_realization(cfg, bad), ConfigError);
}

TEST_F(Probe, ConicPullbackDegree) {
  const RatMap conic({t * t + Poly(1), t * t + t + Poly(1), Rational(2) * t * t + Poly(3)});
  const auto o = height_bound_probe(cfg, wb, real, conic);
  ASSERT_TRUE(o.record.has_value()) << o.excluded;
  EXPECT_EQ(o.record->pullback_degree, 30);
}

TEST_F(Probe, TransversalLine) {
  const RatMap line({t + Poly(1), Rational(2) * t - Poly(1), t + Poly(3)});
  const auto o = height_bound_probe(cfg, wb, real, line);
  ASSERT_TRUE(o.record.has_value()) << o.excluded;
  EXPECT_EQ(o.record->pullback_degree, 15);
  EXPECT_EQ(o.record->truncated, 4);
  EXPECT_EQ(o.record->ratio, make_rational(15, 2));
}

TEST_F(Probe, Exclusions) {
  EXPECT_FALSE(height_bound_probe(cfg, wb, real, RatMap({Poly(), t, Poly(1)})).record.has_value());
  // Through Q1 = [0 : 1 : 2] at t = 0.
  EXPECT_FALSE(height_bound_probe(cfg, wb, real, RatMap({t, Poly(1) + t, Poly(2)})).record.has_value());
  EXPECT_EQ(height_bound_probe(cfg, wb, real, RatMap({Poly(1), Poly(2), Poly(3)})).excluded, "constant map");
}
