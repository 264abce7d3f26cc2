#include <gtest/gtest.h>

#include "mixid/exactnum.hpp"
#include "oracles.hpp"

using namespace mixid;

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 4), Rational(3, 4));
  EXPECT_EQ(Rational(1, 3) * Rational(3, 2), Rational(1, 2));
  EXPECT_EQ(Rational(5, 8) - Rational(5, 8), Rational(0));
  EXPECT_EQ(Rational(2, 4).str(), "1/2");
  EXPECT_THROW(Rational(1, 0), usage_error);
  EXPECT_THROW(Rational(1) / Rational(0), usage_error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("3/8"), Rational(3, 8));
  EXPECT_EQ(Rational::parse(" -3 "), Rational(-3));
  EXPECT_EQ(Rational::parse("5/2^3"), Rational(5, 8));
  EXPECT_THROW(Rational::parse("1/0"), usage_error);
  EXPECT_THROW(Rational::parse("a/2"), usage_error);
  EXPECT_THROW(Rational::parse(""), usage_error);
}

TEST(Rational, Dyadic) {
  EXPECT_TRUE(Rational(3, 8).is_dyadic());
  EXPECT_FALSE(Rational(1, 3).is_dyadic());
  EXPECT_TRUE(Rational(0).is_dyadic());
  EXPECT_EQ(Rational(3, 8).to_dyadic(), Dyadic(mpz_class(3), 3));
}

TEST(Dyadic, NormalizesAndOrders) {
  EXPECT_EQ(Dyadic(mpz_class(4), 3), Dyadic(mpz_class(1), 1));
  EXPECT_LT(Dyadic(mpz_class(1), 2), Dyadic(mpz_class(1), 1));
  EXPECT_EQ((Dyadic(mpz_class(1), 2) + Dyadic(mpz_class(1), 2)).to_rational(), Rational(1, 2));
}

TEST(DyadicInInterval, Examples) {
  EXPECT_EQ(dyadic_in_interval(Rational(0), Rational(1)).to_rational(), Rational(1, 2));
  EXPECT_EQ(dyadic_in_interval(Rational(0), Rational(1), {Rational(1, 2)}).to_rational(), Rational(1, 4));
  EXPECT_EQ(dyadic_in_interval(Rational(5, 8), Rational(1)).to_rational(), Rational(3, 4));
  EXPECT_THROW(dyadic_in_interval(Rational(1), Rational(1)), usage_error);
}

TEST(DyadicInInterval, MatchesEnumeration) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    long a = std::uniform_int_distribution<long>(0, 60)(rng);
    long b = std::uniform_int_distribution<long>(a + 1, 61)(rng);
    Rational lo(a, 61), hi(b, 61);
    std::vector<Rational> avoid{oracle::first_dyadic(lo, hi, {})};
    EXPECT_EQ(dyadic_in_interval(lo, hi).to_rational(), avoid.front());
    EXPECT_EQ(dyadic_in_interval(lo, hi, avoid).to_rational(), oracle::first_dyadic(lo, hi, avoid));
  }
}
