#include <gtest/gtest.h>

#include <random>

#include "svh/rational.hpp"
#include "svh/errors.hpp"

using svh::BigInt;
using svh::Rat;

TEST(Rational, NormalizesSignAndGcd) {
  Rat r(BigInt(4), BigInt(-6));
  EXPECT_EQ(r.num(), BigInt(-2));
  EXPECT_EQ(r.den(), BigInt(3));
  EXPECT_EQ(r.str(), "-2/3");
  EXPECT_EQ(Rat(5).str(), "5");
}

TEST(Rational, ZeroDenominatorThrows) {
  EXPECT_ANY_THROW(Rat(BigInt(1), BigInt(0)));
  EXPECT_ANY_THROW(Rat(1) / Rat(0));
}

TEST(Rational, ParseAcceptsFractionsAndIntegers) {
  EXPECT_EQ(Rat::parse("3/4"), Rat(BigInt(3), BigInt(4)));
  EXPECT_EQ(Rat::parse("-7"), Rat(-7));
  EXPECT_EQ(Rat::parse("6/8"), Rat(BigInt(3), BigInt(4)));
}

TEST(Rational, HugeValuesStayExact) {
  Rat x(1);
  for (int i = 0; i < 40; ++i) x *= Rat(1'000'000'007);
  Rat y = x / Rat(1'000'000'007);
  EXPECT_EQ(y * Rat(1'000'000'007), x);
  EXPECT_TRUE((x - x).is_zero());
}

TEST(Rational, FieldAxiomsOnRandomValues) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-50, 50), p(1, 30);
  for (int t = 0; t < 500; ++t) {
    Rat a(BigInt(d(rng)), BigInt(p(rng))), b(BigInt(d(rng)), BigInt(p(rng))), c(BigInt(d(rng)), BigInt(p(rng)));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a - b) + b, a);
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(Rational, OrderingAndSign) {
  EXPECT_LT(Rat(BigInt(-1), BigInt(2)), Rat(0));
  EXPECT_GT(Rat(BigInt(2), BigInt(3)), Rat(BigInt(1), BigInt(2)));
  EXPECT_EQ(Rat(BigInt(-3), BigInt(5)).sign(), -1);
  EXPECT_EQ(Rat(0).sign(), 0);
}
