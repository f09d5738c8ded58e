#include "seveninv/defect.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>
#include <string>

#include "seveninv/cyclotomic.hpp"
#include "seveninv/errors.hpp"

namespace seveninv {

namespace {

std::string describe(const DefectArgs& a) {
  return "D(" + std::to_string(a.q) + "; " + std::to_string(a.p1) + ", " + std::to_string(a.p2) +
         ", " + std::to_string(a.p3) + ")";
}

constexpr std::int64_t kMaxModulus = 1 << 20;

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

void check_defect_args(const DefectArgs& args) {
  if (args.q == 0 || args.q % 2 == 0) {
    throw InputError("defect argument q must be odd and nonzero: " + describe(args));
  }
  if (std::abs(args.q) > kMaxModulus) throw InputError("defect argument q too large: " + describe(args));
  for (std::int64_t p : {args.p1, args.p2, args.p3}) {
    if (std::gcd(p, args.q) != 1) {
      throw DegenerateDefect("degenerate defect argument: gcd(" + std::to_string(args.q) + ", " +
                             std::to_string(p) + ") != 1 in " + describe(args));
    }
  }
  for (std::int64_t p : {args.p1, args.p2, args.p3}) {
    if (p % 2 != 0) {
      throw InputError("defect argument p must be even (odd p gives an irrational sum): " +
                       describe(args));
    }
  }
}

Rational defect_D_exact(const DefectArgs& args) {
  check_defect_args(args);
  const std::int64_t aq = std::abs(args.q);
  if (aq == 1) return Rational(0);
  // With p even, a = 2 pi h / |q| for h = (p/2) l sgn(q), so cos a lies in
  // Q(zeta_q). Writing 1/sin a = 2i w with w = z/(z^2 - 1), z = zeta_q^h,
  // the product 1/(sin_i^2 sin_j sin_k) = 16 w_i^2 w_j w_k lies there too.
  const int conductor = static_cast<int>(aq);
  const std::int64_t sq = args.q > 0 ? 1 : -1;
  const std::array<std::int64_t, 3> p{args.p1, args.p2, args.p3};
  std::array<std::int64_t, 3> half{};
  for (std::size_t i = 0; i < 3; ++i) half[i] = ((p[i] / 2) % aq) * sq;

  auto cosine = [&](std::int64_t h) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(aq));
    w[static_cast<std::size_t>(mod(h, aq))] += 1;
    w[static_cast<std::size_t>(mod(-h, aq))] += 1;
    return CyclotomicElement::from_exponent_sum(conductor, w, 2);
  };
  // z/(z^2 - 1) = (1/r) sum_{j<r} j z^{1+2j}, r the order of z^2.
  auto half_cosecant = [&](std::int64_t h) {
    const std::int64_t r = aq / std::gcd(mod(h, aq), aq);
    std::vector<std::int64_t> w(static_cast<std::size_t>(aq));
    for (std::int64_t j = 1; j < r; ++j) w[static_cast<std::size_t>(mod(h + 2 * h * j, aq))] += j;
    return CyclotomicElement::from_exponent_sum(conductor, w, r);
  };

  CyclotomicElement total(conductor);
  for (std::int64_t l = 1; l <= (aq - 1) / 2; ++l) {
    std::vector<CyclotomicElement> c;
    std::vector<CyclotomicElement> w;
    for (std::size_t i = 0; i < 3; ++i) {
      const std::int64_t h = mod(half[i] * l, aq);
      c.push_back(cosine(h));
      w.push_back(half_cosecant(h));
    }
    CyclotomicElement inner(conductor);
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t j = (i + 1) % 3;
      const std::size_t k = (i + 2) % 3;
      CyclotomicElement numer = c[j] * c[k] + c[i] * Rational(14);
      numer *= Rational(p[i]);
      inner += numer * w[i];
    }
    total += inner * (w[0] * w[1] * w[2]);
  }
  total *= Rational(Integer(16), Integer(224) * Integer(aq) * Integer(aq));
  try {
    return to_rational(total);
  } catch (const NotRational& e) {
    throw InvariantViolation(std::string("defect sum ") + describe(args) + " is " + e.what());
  }
}

double defect_D_float(const DefectArgs& args) {
  check_defect_args(args);
  // Summands reach ~q^4 and cancel, so accumulate in extended precision.
  const std::int64_t aq = std::abs(args.q);
  const std::int64_t sq = args.q > 0 ? 1 : -1;
  const std::array<std::int64_t, 3> p{args.p1, args.p2, args.p3};
  const long double pi = std::numbers::pi_v<long double>;
  long double total = 0.0L;
  for (std::int64_t l = 1; l <= (aq - 1) / 2; ++l) {
    std::array<long double, 3> c{};
    std::array<long double, 3> s{};
    for (std::size_t i = 0; i < 3; ++i) {
      const std::int64_t e = ((p[i] % (2 * aq)) * l * sq) % (2 * aq);
      const long double angle = pi * static_cast<long double>(e) / static_cast<long double>(aq);
      c[i] = std::cos(angle);
      s[i] = std::sin(angle);
    }
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t j = (i + 1) % 3;
      const std::size_t k = (i + 2) % 3;
      total += static_cast<long double>(p[i]) * (14.0L * c[i] + c[j] * c[k]) / (s[i] * s[i] * s[j] * s[k]);
    }
  }
  return static_cast<double>(total / (224.0L * static_cast<long double>(aq) * static_cast<long double>(aq)));
}

}  // namespace seveninv
