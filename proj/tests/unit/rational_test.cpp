#include <gtest/gtest.h>

#include "cquant/rational.hpp"
#include "generators.hpp"

namespace cquant {
namespace {

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-0.25"), Rational(-1, 4));
  EXPECT_EQ(Rational::parse("1.5e2"), Rational(150));
  EXPECT_EQ(Rational::parse("2e-1"), Rational(1, 5));
  EXPECT_EQ(Rational::parse("7").str(), "7");
  EXPECT_EQ(Rational::parse("-4/6").str(), "-2/3");
}

TEST(Rational, RejectsGarbage) {
  EXPECT_ANY_THROW(Rational::parse(""));
  EXPECT_ANY_THROW(Rational::parse("1/0"));
  EXPECT_ANY_THROW(Rational::parse("abc"));
  EXPECT_ANY_THROW(Rational::parse("1.2.3"));
}

TEST(Rational, CeilFloorSign) {
  EXPECT_EQ(Rational(6, 5).ceil(), 2);
  EXPECT_EQ(Rational(-6, 5).ceil(), -1);
  EXPECT_EQ(Rational(-6, 5).floor(), -2);
  EXPECT_EQ(Rational(4).ceil(), 4);
  EXPECT_EQ(Rational(-3, 7).sign(), -1);
  EXPECT_TRUE(Rational(0).is_zero());
}

TEST(Rational, DecimalRounding) {
  EXPECT_EQ(Rational(1, 3).decimal(4), "0.3333");
  EXPECT_EQ(Rational(2, 3).decimal(2), "0.67");
  EXPECT_EQ(Rational(-1, 2).decimal(1), "-0.5");
}

TEST(Rational, PrintParseRoundTripInLowestTerms) {
  testing::InstanceRng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Rational r(rng.integer(-100000, 100000), rng.integer(1, 5000));
    const std::string s = r.str();
    EXPECT_EQ(Rational::parse(s), r);
    EXPECT_EQ(Rational::parse(s).str(), s);
    EXPECT_EQ(gcd(r.numerator(), r.denominator()), 1);
    EXPECT_GT(r.denominator(), 0);
  }
}

}  // namespace
}  // namespace cquant
