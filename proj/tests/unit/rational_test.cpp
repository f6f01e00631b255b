#include <gtest/gtest.h>

#include <random>

#include "hypcert/errors.hpp"
#include "hypcert/multiplicity.hpp"
#include "hypcert/rational.hpp"

using namespace hypcert;

TEST(Rational, ParseCanonicalizes) {
  EXPECT_EQ(parse_rational("66/2"), Rational(33));
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("7")), "7");
  EXPECT_EQ(to_string(make_rational(Integer(10), Integer(-4))), "-5/2");
}

TEST(Rational, ParseRejectsGarbage) {
  EXPECT_THROW(parse_rational(""), Error);
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational("1/2/3"), Error);
}

TEST(Rational, FloorCeil) {
  EXPECT_EQ(hypcert::floor(make_rational(7, 2)), 3);
  EXPECT_EQ(hypcert::ceil(make_rational(7, 2)), 4);
  EXPECT_EQ(hypcert::floor(make_rational(-7, 2)), -4);
  EXPECT_EQ(hypcert::ceil(make_rational(-7, 2)), -3);
  EXPECT_EQ(hypcert::floor(Rational(5)), 5);
}

TEST(Rational, IsqrtAgainstSquares) {
  for (long n = 0; n < 5000; ++n) {
    const Integer s = isqrt(Integer(n));
    EXPECT_LE(s * s, n);
    EXPECT_GT((s + 1) * (s + 1), n);
  }
  EXPECT_TRUE(is_perfect_square(Integer(48 * 48)));
  EXPECT_FALSE(is_perfect_square(Integer(48)));
}

TEST(Rational, SquareFreeSplit) {
  auto [s, r] = square_free_split(Integer(48));
  EXPECT_EQ(s, 4);
  EXPECT_EQ(r, 3);
  std::mt19937_64 rng(7);
  for (int k = 0; k < 2000; ++k) {
    const Integer n = Integer(static_cast<unsigned long>(rng() % 1000000 + 1));
    auto [a, b] = square_free_split(n);
    EXPECT_EQ(a * a * b, n);
    for (long p = 2; p * p <= b; ++p) EXPECT_NE(b % (p * p), 0) << n;
  }
}

TEST(Rational, BinomialMatchesPascal) {
  std::vector<std::vector<Integer>> row{{1}};
  for (int n = 1; n <= 40; ++n) {
    std::vector<Integer> next(n + 1, 1);
    for (int k = 1; k < n; ++k) next[k] = row.back()[k - 1] + row.back()[k];
    row.push_back(next);
  }
  for (int n = 0; n <= 40; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), row[n][k]);
  }
  EXPECT_EQ(binomial(3, 5), 0);
}

TEST(Multiplicity, CoefficientAndOrder) {
  EXPECT_EQ(Multiplicity(2).coefficient(), make_rational(1, 2));
  EXPECT_EQ(Multiplicity::infinite().coefficient(), 1);
  EXPECT_EQ(Multiplicity::infinite().reciprocal(), 0);
  EXPECT_LT(Multiplicity(1000), Multiplicity::infinite());
  EXPECT_EQ(parse_multiplicity("inf"), Multiplicity::infinite());
  EXPECT_EQ(to_string(Multiplicity(9)), "9");
  EXPECT_THROW(Multiplicity(0), Error);
  EXPECT_THROW(Multiplicity::infinite().value(), DomainError);
}
