#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "hypcert/errors.hpp"
#include "hypcert/positivity.hpp"

using namespace hypcert;

TEST(Positivity, CorollaryIsAmple) {
  const auto cfg = fixture::corollary();
  const auto v = ample_sufficient(cfg, fixture::corollary_weights(cfg));
  ASSERT_TRUE(v.certified) << v.failing;
  EXPECT_TRUE(v.failing.empty());
  for (const auto& c : v.checks) {
    EXPECT_TRUE(c.passed) << c.name;
    if (c.name == "bezout_residue") {
      EXPECT_EQ(c.value, 3);
    }
  }
}

TEST(Positivity, ZeroExceptionalIntersectionIsInconclusive) {
  const auto cfg = fixture::corollary();
  // Only the hyperplane carries weight: D.E_Q = 0.
  const auto v = ample_sufficient(cfg, DivisorClass::hyperplane(cfg.universe()));
  EXPECT_FALSE(v.certified);
  EXPECT_EQ(v.failing, "exceptional");
}

TEST(Positivity, PlaneLineIsAmple) {
  const auto cfg = fixture::plane_line();
  EXPECT_TRUE(ample_sufficient(cfg, WeightedBoundary(cfg, {1})).certified);
}

TEST(Positivity, CanonicalBigness) {
  const auto cfg = fixture::corollary();
  const auto big = orbifold_canonical_big(
      cfg, {Multiplicity(2), Multiplicity::infinite(), Multiplicity::infinite(), Multiplicity::infinite()});
  EXPECT_TRUE(big.certified);
  EXPECT_EQ(big.plane_degree, make_rational(1, 2));

  const auto quartic = SurfaceConfig::plane({Component{4}});
  const auto q = orbifold_canonical_big(quartic, {Multiplicity(5)});
  EXPECT_TRUE(q.certified);
  EXPECT_EQ(q.plane_degree, make_rational(1, 5));
  EXPECT_FALSE(orbifold_canonical_big(quartic, {Multiplicity(4)}).certified);

  const auto line = fixture::plane_line();
  const auto l = orbifold_canonical_big(line, {Multiplicity::infinite()});
  EXPECT_FALSE(l.certified);
  EXPECT_EQ(l.plane_degree, -2);
}

TEST(Positivity, MonotoneInWeights) {
  const auto cfg = fixture::corollary();
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> w(1, 6);
  for (int k = 0; k < 3000; ++k) {
    std::vector<Rational> p{w(rng), w(rng), w(rng), w(rng)};
    const bool base = ample_sufficient(cfg, WeightedBoundary(cfg, p)).certified;
    if (!base) continue;
    auto bumped = p;
    bumped[rng() % 4] += 1;
    EXPECT_TRUE(ample_sufficient(cfg, WeightedBoundary(cfg, bumped)).certified);
  }
}

TEST(Positivity, MonotoneInMultiplicities) {
  const auto cfg = fixture::corollary();
  for (long a = 1; a <= 6; ++a) {
    for (long b = 1; b <= 6; ++b) {
      std::vector<Multiplicity> m{Multiplicity(a), Multiplicity(b), Multiplicity(2), Multiplicity(2)};
      const bool base = orbifold_canonical_big(cfg, m).certified;
      m[0] = Multiplicity(a + 1);
      if (base) {
        EXPECT_TRUE(orbifold_canonical_big(cfg, m).certified);
      }
    }
  }
}

TEST(Positivity, ConsequencesAndScaling) {
  const auto cfg = fixture::corollary();
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<long> w(1, 9);
  for (int k = 0; k < 2000; ++k) {
    std::vector<Rational> p{w(rng), w(rng), w(rng), w(rng)};
    const WeightedBoundary wb(cfg, p);
    const auto v = ample_sufficient(cfg, wb);
    auto scaled = p;
    for (auto& x : scaled) x *= 3;
    EXPECT_EQ(ample_sufficient(cfg, WeightedBoundary(cfg, scaled)).certified, v.certified);
    if (!v.certified) continue;
    const auto& d = wb.integral_class();
    EXPECT_GT(intersect(d, d), 0);
    for (std::size_t i = 0; i < cfg.component_count(); ++i) EXPECT_GT(intersect(d, strict_transform(cfg, i)), 0);
  }
}

TEST(Positivity, RationalWeights) {
  const auto cfg = fixture::corollary();
  const WeightedBoundary wb(cfg, {make_rational(1, 2), make_rational(1, 3), 1, 1});
  EXPECT_FALSE(wb.integral());
  EXPECT_EQ(wb.denominator(), 6);
  EXPECT_EQ(wb.scaled_class().h(), 3 + 2 + 6 + 6);
  EXPECT_THROW(wb.integral_class(), DomainError);
}
