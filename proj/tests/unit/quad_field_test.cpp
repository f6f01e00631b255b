#include <gtest/gtest.h>

#include <random>

#include "hypcert/errors.hpp"
#include "hypcert/quad_field.hpp"
#include "oracles.hpp"

using namespace hypcert;

namespace {

const QuadExt kXi4(15, -4, 3);

Rational small_rational(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return make_rational(num(rng), den(rng));
}

QuadExt random_in_field(std::mt19937_64& rng, long radicand) {
  return QuadExt(small_rational(rng, 40), small_rational(rng, 40), Rational(radicand));
}

}  // namespace

TEST(QuadExt, CanonicalRadicand) {
  const QuadExt x = QuadExt::sqrt(48);
  EXPECT_EQ(x.radicand(), 3);
  EXPECT_EQ(x.radical_coeff(), 4);
  EXPECT_EQ(QuadExt::sqrt(make_rational(3, 4)), QuadExt(0, make_rational(1, 2), 3));
  EXPECT_TRUE(QuadExt::sqrt(49).is_rational());
  EXPECT_EQ(QuadExt::sqrt(49), QuadExt(7));
  EXPECT_EQ(QuadExt(5, 0, 7), QuadExt(5));
  EXPECT_THROW(QuadExt::sqrt(-1), DomainError);
}

TEST(QuadExt, Arithmetic) {
  EXPECT_EQ(kXi4 * kXi4, QuadExt(273, -120, 3));
  EXPECT_EQ(kXi4 + QuadExt(0), kXi4);
  EXPECT_EQ(kXi4 * kXi4.conjugate(), QuadExt(225 - 48));
  EXPECT_EQ(kXi4.norm(), 177);
  EXPECT_EQ(kXi4 / kXi4, QuadExt(1));
  EXPECT_THROW(kXi4 + QuadExt::sqrt(2), DomainError);
  EXPECT_THROW(kXi4 / QuadExt(0), DomainError);
}

TEST(QuadExt, Sign) {
  EXPECT_EQ(kXi4.sign(), 1);
  EXPECT_EQ(QuadExt(0).sign(), 0);
  EXPECT_EQ((-kXi4).sign(), -1);
  EXPECT_EQ(QuadExt(7, -4, 3).sign(), 1);   // 49 > 48
  EXPECT_EQ(QuadExt(-7, 4, 3).sign(), -1);
}

TEST(QuadExt, CompareCross) {
  EXPECT_EQ(compare_cross(kXi4, QuadExt(make_rational(1947, 484))), 1);
  EXPECT_EQ(compare_cross(kXi4, kXi4), 0);
  EXPECT_EQ(compare_cross(QuadExt::sqrt(2), QuadExt::sqrt(3)), -1);
  EXPECT_EQ(compare_cross(QuadExt(1, 1, 2), QuadExt(1, 1, 3)), -1);
  EXPECT_EQ(compare_cross(QuadExt(0, 1, 8), QuadExt(0, 2, 2)), 0);
}

TEST(QuadExt, MinRoot) {
  EXPECT_EQ(min_root_quadratic(1, 1, 1), QuadExt(1));
  EXPECT_EQ(min_root_quadratic(0, 11, 177), QuadExt(make_rational(177, 22)));
  EXPECT_EQ(min_root_quadratic(1, 15, 177), kXi4);
  EXPECT_THROW(min_root_quadratic(1, 1, 2), DomainError);
  EXPECT_THROW(min_root_quadratic(0, 0, 1), DomainError);
}

TEST(QuadExt, MinRootIsARoot) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coef(-30, 30);
  int checked = 0;
  for (int k = 0; k < 3000; ++k) {
    const Integer A = coef(rng), B = coef(rng), C = coef(rng);
    QuadExt x;
    try {
      x = min_root_quadratic(A, B, C);
    } catch (const DomainError&) {
      continue;
    }
    ++checked;
    EXPECT_EQ(QuadExt(Rational(A)) * x * x - QuadExt(Rational(2 * B)) * x + QuadExt(Rational(C)), QuadExt(0));
    EXPECT_EQ(x.sign(), 1);
  }
  EXPECT_GT(checked, 500);
}

TEST(QuadExt, FieldAxioms) {
  std::mt19937_64 rng(3);
  const long radicands[] = {2, 3, 5, 6, 7, 12, 177};
  for (int k = 0; k < 10000; ++k) {
    const long d = radicands[k % 7];
    const QuadExt a = random_in_field(rng, d), b = random_in_field(rng, d), c = random_in_field(rng, d);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    if (b.sign() != 0) {
      ASSERT_EQ((a / b) * b, a);
    }
    ASSERT_EQ((a * b).sign(), a.sign() * b.sign());
    ASSERT_NE(a.sign() * (-a).sign(), 1);
  }
}

TEST(QuadExt, CompareCrossAgreesWithIntervals) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> rad(2, 60);
  int decided = 0;
  for (int k = 0; k < 10000; ++k) {
    const QuadExt x = random_in_field(rng, rad(rng));
    const QuadExt y = random_in_field(rng, rad(rng));
    const auto ix = oracle::enclose(x), iy = oracle::enclose(y);
    const int c = compare_cross(x, y);
    if (ix.certainly_less(iy)) {
      ASSERT_EQ(c, -1) << to_string(x) << " vs " << to_string(y);
      ++decided;
    } else if (iy.certainly_less(ix)) {
      ASSERT_EQ(c, 1) << to_string(x) << " vs " << to_string(y);
      ++decided;
    } else {
      // Overlap at 400 bits only happens for equal values here.
      ASSERT_EQ(c, 0) << to_string(x) << " vs " << to_string(y);
    }
  }
  EXPECT_GT(decided, 9000);
}

TEST(QuadExt, FloorAgreesWithIntervals) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 2000; ++k) {
    const QuadExt x = random_in_field(rng, 2 + static_cast<long>(rng() % 50));
    const Integer f = hypcert::floor(x);
    const auto ix = oracle::enclose(x);
    EXPECT_TRUE(ix.contains(Rational(f)) || oracle::Interval(Rational(f)).certainly_less(ix)) << to_string(x);
    EXPECT_TRUE(ix.certainly_less(oracle::Interval(Rational(f + 1)))) << to_string(x);
  }
}

TEST(QuadExt, RationalBracket) {
  std::mt19937_64 rng(13);
  const Rational width = make_rational(1, 1000000);
  for (int k = 0; k < 2000; ++k) {
    const QuadExt x = random_in_field(rng, 2 + static_cast<long>(rng() % 50));
    const auto br = rational_bracket(x, width);
    EXPECT_LE(br.upper - br.lower, width);
    if (x.is_rational()) {
      EXPECT_EQ(br.lower, x.rational_part());
      EXPECT_EQ(br.upper, x.rational_part());
    } else {
      EXPECT_LT(QuadExt(br.lower), x);
      EXPECT_GT(QuadExt(br.upper), x);
    }
  }
}

TEST(QuadExt, TextRoundTrip) {
  EXPECT_EQ(parse_quad(to_string(kXi4)), kXi4);
  EXPECT_EQ(parse_quad("177/22"), QuadExt(make_rational(177, 22)));
  std::mt19937_64 rng(17);
  for (int k = 0; k < 1000; ++k) {
    const QuadExt x = random_in_field(rng, 2 + static_cast<long>(rng() % 50));
    EXPECT_EQ(parse_quad(to_string(x)), x) << to_string(x);
  }
  EXPECT_EQ(to_decimal(kXi4, 8), "8.0717968");
}
