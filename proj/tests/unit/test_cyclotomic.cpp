#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "seveninv/cyclotomic.hpp"
#include "seveninv/errors.hpp"
#include "support/gen.hpp"

using namespace seveninv;

namespace {

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

IntPolynomial ints(std::initializer_list<long> cs) {
  IntPolynomial out;
  for (long c : cs) out.emplace_back(c);
  return out;
}

CyclotomicElement one(int n) { return CyclotomicElement(n, Rational(1)); }

}  // namespace

TEST(CyclotomicPolynomial, SmallValues) {
  EXPECT_EQ(cyclotomic_polynomial(1), ints({-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), ints({1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), ints({1, 0, -1, 0, 1}));
}

// x^N - 1 must equal the product of Phi_d over all divisors d.
TEST(CyclotomicPolynomial, DivisorProductOracle) {
  for (int n = 1; n <= 130; ++n) {
    IntPolynomial prod = ints({1});
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d));
    IntPolynomial expect(static_cast<std::size_t>(n) + 1);
    expect[0] = -1;
    expect[static_cast<std::size_t>(n)] = 1;
    ASSERT_EQ(prod, expect) << "N = " << n;
    ASSERT_EQ(static_cast<int>(cyclotomic_polynomial(n).size()) - 1, euler_phi(n));
  }
}

TEST(CyclotomicPolynomial, VanishesAtPrimitiveRoot) {
  for (int n : {5, 12, 35, 84, 105, 120}) {
    const auto& p = cyclotomic_polynomial(n);
    const std::complex<double> z = std::polar(1.0, 2 * std::numbers::pi / n);
    std::complex<double> acc = 0;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * z + p[k].get_d();
    EXPECT_LT(std::abs(acc), 1e-6) << n;
  }
}

TEST(CycArith, RootOfUnityOrder) {
  const auto z = CyclotomicElement::root_of_unity(3, 1);
  const auto z2 = CyclotomicElement::root_of_unity(3, 2);
  EXPECT_EQ(cyc_arith(z, z2, CycOp::Mul), one(3));
}

TEST(CycArith, TwiceCosThirdIsOne) {
  const auto s = CyclotomicElement::root_of_unity(6, 1) + CyclotomicElement::root_of_unity(6, -1);
  EXPECT_TRUE(s.is_rational());
  EXPECT_EQ(to_rational(s), Rational(1));
}

TEST(CycArith, InverseRoundTrip) {
  const auto x = one(5) + CyclotomicElement::root_of_unity(5, 1);
  const auto q = cyc_arith(one(5), x, CycOp::Div);
  EXPECT_EQ(cyc_arith(q, x, CycOp::Mul), one(5));
}

TEST(CycArith, Errors) {
  EXPECT_THROW(one(5) + one(7), ConductorMismatch);
  EXPECT_THROW(one(5) / CyclotomicElement(5), DivisionByZero);
  EXPECT_THROW(CyclotomicElement(5).inverse(), DivisionByZero);
}

TEST(Trig, CosValues) {
  EXPECT_EQ(to_rational(cos_pi(1, 3)), Rational::parse("1/2"));
  EXPECT_EQ(to_rational(cos_pi(4, 3)), Rational::parse("-1/2"));
  EXPECT_EQ(to_rational(cos_pi(0, 5)), Rational(1));
}

TEST(Trig, SinValues) {
  EXPECT_EQ(to_rational(sin_pi(1, 2)), Rational(1));
  EXPECT_TRUE(sin_pi(0, 7).is_zero());
  const auto s = sin_pi(4, 3);
  EXPECT_EQ(s.conductor(), 12);
  EXPECT_EQ(to_rational(s * s), Rational::parse("3/4"));
  EXPECT_LT(s.embed().real(), 0);
  // (z - 1/z) / (2i) with z = exp(4 pi i / 3) = zeta_12^8
  const auto direct = (CyclotomicElement::root_of_unity(12, 8) - CyclotomicElement::root_of_unity(12, -8)) /
                      (CyclotomicElement(12, Rational(2)) * imaginary_unit(12));
  EXPECT_EQ(s, direct);
}

TEST(Trig, CosFifthIsIrrational) {
  try {
    to_rational(cos_pi(1, 5));
    FAIL() << "expected NotRational";
  } catch (const NotRational& e) {
    EXPECT_NE(std::string(e.what()).find("not rational"), std::string::npos);
    EXPECT_EQ(e.coefficients().size(), 4u);
  }
}

TEST(Trig, EmbeddedVariantsAgree) {
  for (std::int64_t b = 1; b <= 20; ++b) {
    for (std::int64_t a = -2 * b; a <= 2 * b; ++a) {
      const int n = static_cast<int>(4 * b);
      EXPECT_EQ(sin_pi(a, b, n), sin_pi(a, b)) << a << "/" << b;
      const auto s = sin_pi(a, b, n);
      if (!s.is_zero()) {
        EXPECT_EQ(inv_sin_pi(a, b, n) * s, one(n)) << a << "/" << b;
      } else {
        EXPECT_THROW(inv_sin_pi(a, b, n), DivisionByZero);
      }
    }
  }
  EXPECT_THROW(cos_pi(1, 3, 8), InputError);
  EXPECT_THROW(sin_pi(1, 3, 6), InputError);
}

TEST(CyclotomicProperty, FieldAxioms) {
  prop::Gen g(2024);
  for (int t = 0; t < 150; ++t) {
    const int n = static_cast<int>(g.range(1, 60));
    const auto x = g.element(n, 20);
    const auto y = g.element(n, 20);
    const auto z = g.element(n, 20);
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ(x * y, y * x);
    if (!x.is_zero()) {
      ASSERT_EQ(x * x.inverse(), one(n));
    }
  }
}

TEST(CyclotomicProperty, PythagoreanAndPeriodicity) {
  prop::Gen g(7);
  for (int t = 0; t < 200; ++t) {
    const std::int64_t b = g.range(1, 30);
    const std::int64_t a = g.range(-200, 200);
    const int n = static_cast<int>(4 * b);
    const auto c = cos_pi(a, b, n);
    const auto s = sin_pi(a, b, n);
    ASSERT_EQ(c * c + s * s, one(n));
    ASSERT_EQ(cos_pi(a + 2 * b, b), cos_pi(a, b));
    const double angle = std::numbers::pi * static_cast<double>(a) / static_cast<double>(b);
    ASSERT_NEAR(c.embed().real(), std::cos(angle), 1e-12);
    ASSERT_NEAR(s.embed().real(), std::sin(angle), 1e-12);
    ASSERT_NEAR(c.embed().imag(), 0.0, 1e-12);
  }
}

TEST(CyclotomicProperty, ConjugationIsInvolutiveAndMultiplicative) {
  prop::Gen g(99);
  for (int t = 0; t < 60; ++t) {
    const int n = static_cast<int>(g.range(1, 48));
    const auto x = g.element(n, 9);
    const auto y = g.element(n, 9);
    ASSERT_EQ(x.conjugate().conjugate(), x);
    ASSERT_EQ((x * y).conjugate(), x.conjugate() * y.conjugate());
    ASSERT_TRUE((x + x.conjugate()).is_real());
  }
}

TEST(CyclotomicProperty, NormInverseMatchesEuclideanInverse) {
  prop::Gen g(515);
  for (int t = 0; t < 40; ++t) {
    const int n = static_cast<int>(g.range(1, 40));
    const auto x = g.element(n, 12);
    if (x.is_zero()) continue;
    ASSERT_EQ(x.inverse(), detail::inverse_by_euclid(x)) << n;
  }
}

TEST(CyclotomicProperty, GaloisActionIsAFieldAutomorphism) {
  prop::Gen g(516);
  for (int t = 0; t < 40; ++t) {
    const int n = static_cast<int>(g.range(3, 60));
    std::int64_t k = 0;
    do {
      k = g.range(1, n - 1);
    } while (std::gcd<std::int64_t>(k, n) != 1);
    const auto x = g.element(n, 12);
    const auto y = g.element(n, 12);
    ASSERT_EQ((x * y).galois(k), x.galois(k) * y.galois(k));
    ASSERT_EQ((x + y).galois(k), x.galois(k) + y.galois(k));
    ASSERT_EQ(CyclotomicElement::root_of_unity(n, 1).galois(k), CyclotomicElement::root_of_unity(n, k));
  }
  EXPECT_THROW(CyclotomicElement::root_of_unity(12, 1).galois(3), InputError);
}
