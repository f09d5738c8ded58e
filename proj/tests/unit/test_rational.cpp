#include <gtest/gtest.h>

#include "seveninv/errors.hpp"
#include "seveninv/rational.hpp"
#include "support/gen.hpp"

using namespace seveninv;

TEST(Rational, NormalizesSignAndGcd) {
  EXPECT_EQ(rat_normalize(6, -4), Rational(-3) / Rational(2));
  EXPECT_EQ(rat_normalize(6, -4).str(), "-3/2");
  const Rational zero = rat_normalize(0, 7);
  EXPECT_EQ(zero.num(), 0);
  EXPECT_EQ(zero.den(), 1);
}

// -(36k^4+36k^3+27k^2+9k+2)/56 at k = 1 is -110/56.
TEST(Rational, QuarticAtOneReduces) {
  const long k = 1;
  const Integer num = -(144 * k * k * k * k + 144 * k * k * k + 108 * k * k + 36 * k + 8);
  EXPECT_EQ(rat_normalize(num, 224).str(), "-55/28");
  EXPECT_EQ(rat_normalize(-110, 56), rat_normalize(num, 224));
}

TEST(Rational, ZeroDenominatorThrows) {
  EXPECT_THROW(rat_normalize(1, 0), DivisionByZero);
  EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
}

TEST(Rational, FracAndFloor) {
  EXPECT_EQ(Rational::parse("-27/14").frac(), Rational::parse("1/14"));
  EXPECT_EQ(Rational::parse("-27/14").floor(), -2);
  EXPECT_EQ(Rational::parse("5").frac(), Rational(0));
}

TEST(Rational, ParseRejectsGarbage) {
  EXPECT_THROW(Rational::parse("x/3"), InputError);
  EXPECT_THROW(Rational::parse("1/0"), DivisionByZero);
}

TEST(Rational, CanonicalFormProperty) {
  prop::Gen g(11);
  for (int t = 0; t < 500; ++t) {
    const Rational x = g.rational(1000);
    const Rational y = g.rational(1000);
    const Rational z = x * y - x / (y.is_zero() ? Rational(1) : y);
    EXPECT_GT(z.den(), 0);
    Integer gg;
    mpz_gcd(gg.get_mpz_t(), z.num().get_mpz_t(), z.den().get_mpz_t());
    EXPECT_EQ(gg, 1);
    EXPECT_EQ(Rational::parse(z.str()), z);
  }
}
