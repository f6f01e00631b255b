#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "hypcert/cz_certifier.hpp"
#include "hypcert/errors.hpp"
#include "oracles.hpp"

using namespace hypcert;

namespace {

const QuadExt kXi4(15, -4, 3);

}  // namespace

class Corollary : public ::testing::Test {
 protected:
  SurfaceConfig cfg = fixture::corollary();
  WeightedBoundary wb = fixture::corollary_weights(cfg);
  CZReport report = evaluate_cz(cfg, wb);
};

TEST_F(Corollary, Passes) {
  EXPECT_EQ(report.overall, Verdict::pass);
  EXPECT_TRUE(report.first_failure.empty());
  EXPECT_EQ(report.dp_squared, 177);
  ASSERT_EQ(report.hypotheses.size(), 4u);
  for (const auto& h : report.hypotheses) EXPECT_EQ(h.status, Verdict::pass) << h.name;
}

TEST_F(Corollary, XiValues) {
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(xi(cfg, wb, i), QuadExt(make_rational(177, 22)));
  const QuadExt x4 = xi(cfg, wb, 3);
  EXPECT_EQ(x4, kXi4);
  EXPECT_EQ(x4.rational_part(), 15);
  EXPECT_EQ(x4.radical_coeff(), -4);
  EXPECT_EQ(x4.radicand(), 3);
}

TEST_F(Corollary, CzReductions) {
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& r = report.components[i];
    EXPECT_TRUE(r.cz_inequality_holds);
    EXPECT_EQ(r.dp_dot, 11);
    EXPECT_EQ(r.self_intersection, 0);
    // 2 D^2 xi - 3 D^2 p = 3 * 177 * (177 - 176) / 44 at xi = 177/22, p = 4.
    EXPECT_EQ(r.cz_margin, QuadExt(make_rational(3 * 177 * (177 - 176), 44)));
  }
  const auto& r4 = report.components[3];
  EXPECT_EQ(r4.dp_dot, 15);
  EXPECT_EQ(r4.cz_margin, QuadExt(2 * 177) * kXi4 - QuadExt(15) * kXi4 * kXi4 - QuadExt(9 * 177));
  EXPECT_GT(r4.cz_margin, QuadExt(0));
  EXPECT_TRUE(cz_inequality(cfg, wb, 3));
}

TEST_F(Corollary, BetaValues) {
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(report.components[i].beta, QuadExt(make_rational(1947, 484)));
    EXPECT_TRUE(report.components[i].beta_exceeds_p);
  }
  const QuadExt b4 = beta_lower(cfg, wb, 3);
  EXPECT_EQ(b4, QuadExt(make_rational(2, 3)) * kXi4 - QuadExt(make_rational(15, 3 * 177)) * kXi4 * kXi4);
  EXPECT_GT(b4, QuadExt(3));
}

TEST_F(Corollary, BetaFourAgainstIntervals) {
  using oracle::Interval;
  const Interval xi4 = Interval(Rational(15)) - Interval(Rational(4)) * Interval::sqrt(3);
  const Interval b4 = Interval(make_rational(2, 3)) * xi4 - Interval(make_rational(15, 531)) * xi4 * xi4;
  ASSERT_TRUE(b4.narrower_than_digits(50));
  EXPECT_TRUE(Interval(Rational(3)).certainly_less(b4));
  const auto mine = oracle::enclose(report.components[3].beta);
  EXPECT_EQ(mine.lower_digits(50), b4.lower_digits(50));
  EXPECT_EQ(mine.upper_digits(50), b4.upper_digits(50));
}

TEST_F(Corollary, Epsilon) {
  ASSERT_TRUE(report.epsilon.has_value());
  EXPECT_EQ(*report.epsilon, QuadExt(make_rational(1, 176)));
  EXPECT_EQ(*report.epsilon_lower_bound, make_rational(1, 176));
  EXPECT_EQ(*report.epsilon_component, 0u);
  const QuadExt eps4 = (report.components[3].beta - QuadExt(3)) / QuadExt(3);
  EXPECT_GT(eps4, *report.epsilon);
}

TEST_F(Corollary, HodgeIndexGuard) {
  for (const auto& r : report.components) {
    EXPECT_GE(r.dp_dot * r.dp_dot, Rational(r.self_intersection) * report.dp_squared);
  }
}

TEST(CzCertifier, PlaneLineFails) {
  const auto cfg = fixture::plane_line();
  const WeightedBoundary wb(cfg, {1});
  EXPECT_EQ(xi(cfg, wb, 0), QuadExt(1));
  EXPECT_FALSE(cz_inequality(cfg, wb, 0));
  EXPECT_EQ(beta_lower(cfg, wb, 0), QuadExt(make_rational(1, 3)));
  const auto report = evaluate_cz(cfg, wb);
  EXPECT_EQ(report.overall, Verdict::fail);
  EXPECT_EQ(report.first_failure, "cz_inequality");
}

TEST(CzCertifier, PlaneBetaIsAThird) {
  const auto cfg = fixture::plane_line();
  for (long a = 1; a <= 30; ++a) {
    EXPECT_EQ(beta_lower(cfg, WeightedBoundary(cfg, {a}), 0), QuadExt(make_rational(a, 3)));
  }
}

TEST(CzCertifier, ThreeMeetingComponentsFail) {
  SurfaceSpec spec = fixture::corollary().spec();
  spec.meeting_points = {{0, 1, 2}};
  const auto cfg = SurfaceConfig::build(spec);
  const auto report = evaluate_cz(cfg, fixture::corollary_weights(cfg));
  EXPECT_EQ(report.overall, Verdict::fail);
  EXPECT_EQ(report.first_failure, "no_three_meet");
}

TEST(CzCertifier, SingleComponentRejectedUnlessAllowed) {
  const auto cfg = SurfaceConfig::plane({Component{4}});
  const WeightedBoundary wb(cfg, {1});
  const auto strict = evaluate_cz(cfg, wb);
  EXPECT_EQ(strict.hypotheses.back().name, "component_count");
  EXPECT_EQ(strict.hypotheses.back().status, Verdict::fail);
  const auto relaxed = evaluate_cz(cfg, wb, CZOptions{false});
  EXPECT_EQ(relaxed.hypotheses.back().status, Verdict::pass);
}

TEST(CzCertifier, EpsilonBoundaryCase) {
  ComponentRecord r;
  r.weight = 3;
  r.beta = QuadExt(3);
  EXPECT_THROW(epsilon({r}), DomainError);
  ComponentRecord a, b;
  a.weight = 1;
  a.beta = QuadExt(2);
  b.index = 1;
  b.weight = 1;
  b.beta = QuadExt(2);
  EXPECT_EQ(epsilon({a, b}).component, 0u);
}

TEST(CzCertifier, InequalityImpliesBetaAboveWeight) {
  std::mt19937_64 rng(41);
  std::size_t implications = 0;
  for (int k = 0; k < 3000; ++k) {
    const auto cfg = fixture::random_config(rng);
    const WeightedBoundary wb(cfg, fixture::random_weights(rng, cfg));
    for (std::size_t i = 0; i < cfg.component_count(); ++i) {
      ComponentRecord r;
      try {
        r = component_record(cfg, wb, i);
      } catch (const DomainError&) {
        continue;
      }
      if (!r.cz_inequality_holds) continue;
      ++implications;
      ASSERT_TRUE(r.beta_exceeds_p);
      ASSERT_GT(r.beta, QuadExt(r.weight));
    }
  }
  EXPECT_GT(implications, 1000u);
}

TEST(CzCertifier, ScalingIsLinear) {
  const auto cfg = fixture::corollary();
  const auto base = fixture::corollary_weights(cfg);
  for (long lambda = 2; lambda <= 7; ++lambda) {
    std::vector<Rational> w;
    for (const auto& p : base.weights()) w.push_back(p * lambda);
    const WeightedBoundary scaled(cfg, w);
    for (std::size_t i = 0; i < cfg.component_count(); ++i) {
      EXPECT_EQ(xi(cfg, scaled, i), QuadExt(lambda) * xi(cfg, base, i));
      EXPECT_EQ(beta_lower(cfg, scaled, i), QuadExt(lambda) * beta_lower(cfg, base, i));
    }
  }
}

TEST(CzCertifier, PassImpliesEveryComponentPasses) {
  std::mt19937_64 rng(43);
  int passed = 0;
  for (int k = 0; k < 1500; ++k) {
    const auto cfg = fixture::random_config(rng);
    const WeightedBoundary wb(cfg, fixture::random_weights(rng, cfg));
    const auto report = evaluate_cz(cfg, wb);
    if (report.overall != Verdict::pass) continue;
    ++passed;
    for (const auto& r : report.components) {
      EXPECT_TRUE(r.cz_inequality_holds);
      EXPECT_TRUE(r.beta_exceeds_p);
    }
    ASSERT_TRUE(report.epsilon_lower_bound.has_value());
    EXPECT_GT(*report.epsilon_lower_bound, 0);
    EXPECT_LE(QuadExt(*report.epsilon_lower_bound), *report.epsilon);
  }
  EXPECT_GT(passed, 0);
  RecordProperty("passing_configs", passed);
}
