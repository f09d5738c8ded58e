#include <gtest/gtest.h>

#include "seveninv/defect.hpp"
#include "seveninv/errors.hpp"
#include "seveninv/inertia.hpp"
#include "support/pairs.hpp"

using namespace seveninv;
using prop::mk;

namespace {
Rational R(const char* s) { return Rational::parse(s); }
const ParamPair kCal = prop::mk({-3, -3, 1}, {1, 1, 1});
}  // namespace

TEST(Strata, Counts) {
  EXPECT_TRUE(strata(mk({1, 1, 1}, {1, 5, 1})).empty());
  const auto s = strata(kCal);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].side, Side::Minus);
  EXPECT_EQ(s[0].k, 1);
  EXPECT_EQ(s[0].weights, (std::array<std::int64_t, 3>{4, -4, -2}));
  EXPECT_EQ(s[0].theta_num, (std::array<std::int64_t, 3>{8, -8, -4}));
  EXPECT_EQ(s[0].chern[0], R("-4/3"));
  EXPECT_EQ(s[0].chern[1], R("4/3"));
  EXPECT_EQ(s[0].chern[2], R("2/3"));
  EXPECT_EQ(s[0].sigma, 1);
  EXPECT_EQ(s[0].epsilon, 1);
  for (int k = -3; k <= 3; ++k) {
    for (const auto& st : strata(prop::milnor_k(k))) EXPECT_EQ(st.side, Side::Minus);
  }
  const auto big = strata(mk({-11, 1, 5}, {9, 1, -3}));
  EXPECT_EQ(big.size(), 5u + 4u);
}

TEST(Strata, EpsilonIsPlusOneOnRandomPairs) {
  prop::Gen g(61);
  for (int t = 0; t < 40; ++t) {
    for (const auto& st : strata(prop::random_pair(g, 3, 41, 99, false))) {
      ASSERT_EQ(st.epsilon, 1);
      ASSERT_EQ(st.sigma, 1);
    }
  }
}

TEST(StratumIntegral, CalibrationPair) {
  EXPECT_EQ(calibrated_convention(), CschArgument::Half);
  const auto s = strata(kCal);
  EXPECT_EQ(to_rational(stratum_integral(s[0])), R("3/28"));
  EXPECT_EQ(lambda_s_integral(kCal), R("-1/28"));
  EXPECT_EQ(lambda_s_integral(kCal), defect_D_exact({3, 4, -2, 4}));
  EXPECT_NE(lambda_s_integral(kCal, CschArgument::Full), lambda_s_integral(kCal, CschArgument::Half));
}

TEST(StratumIntegral, LinearInChernNumbers) {
  prop::Gen g(9);
  for (int t = 0; t < 10; ++t) {
    for (auto st : strata(prop::random_pair(g, 3, 15, 41, false))) {
      const CyclotomicElement base = stratum_integral(st);
      for (auto& c : st.chern) c *= Rational(2);
      ASSERT_EQ(stratum_integral(st), base * Rational(2));
    }
  }
}

TEST(StratumIntegral, RealValued) {
  prop::Gen g(10);
  for (int t = 0; t < 10; ++t) {
    for (const auto& st : strata(prop::random_pair(g, 3, 25, 61, false))) {
      ASSERT_TRUE(stratum_integral(st).is_real());
    }
  }
}

TEST(StratumIntegral, WeightPeriodicity) {
  prop::Gen g(12);
  for (int t = 0; t < 10; ++t) {
    for (const auto& st : strata(prop::random_pair(g, 3, 21, 61, false))) {
      const CyclotomicElement base = stratum_integral(st);
      for (std::size_t j = 0; j < 3; ++j) {
        StratumData shifted = st;
        shifted.theta_num[j] += 2 * std::abs(st.q);  // theta_j + 2 pi
        ASSERT_EQ(stratum_integral(shifted), base);
      }
    }
  }
}

TEST(StratumIntegral, PoleIsReported) {
  StratumData st = strata(kCal)[0];
  st.theta_num[1] = 0;
  EXPECT_THROW(stratum_integral(st), DegenerateDefect);
}

TEST(LambdaS, Vacuity) {
  EXPECT_EQ(lambda_s_integral(mk({1, 1, 1}, {1, 5, 1})), Rational(0));
  EXPECT_EQ(lambda_s_integral(mk({1, -3, 5}, {1, 9, 5})), Rational(0));
}

TEST(LambdaS, SwapNegates) {
  prop::Gen g(14);
  for (int t = 0; t < 10; ++t) {
    const ParamPair p = prop::random_pair(g, 1, 21, 61, false);
    ASSERT_EQ(lambda_s_integral(mk(p.b, p.a)), -lambda_s_integral(p));
  }
}

TEST(OracleCheck, CalibrationAndVacuous) {
  const OracleReport r = oracle_check(kCal);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.lambda_s, R("-1/28"));
  EXPECT_EQ(r.oracle, R("1/28"));
  EXPECT_EQ(r.closed_form, R("1/28"));
  EXPECT_EQ(r.stratum_values.size(), 1u);
  const OracleReport v = oracle_check(mk({1, 1, 1}, {1, 5, 1}));
  EXPECT_TRUE(v.equal);
  EXPECT_EQ(v.oracle, Rational(0));
}

TEST(OracleCheck, RandomPairs) {
  prop::Gen g(2718);
  for (int t = 0; t < 20; ++t) {
    const ParamPair p = prop::random_pair(g, 3, 25, 99, false);
    const OracleReport r = oracle_check(p);
    ASSERT_TRUE(r.equal) << p.str() << " oracle " << r.oracle << " closed " << r.closed_form;
  }
}
