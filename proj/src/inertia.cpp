#include "seveninv/inertia.hpp"

#include <mutex>
#include <numeric>
#include <optional>

#include "seveninv/defect.hpp"
#include "seveninv/errors.hpp"

namespace seveninv {

namespace {

// Value and gradient in (x_1, x_2, x_3) at 0.
struct Jet {
  CyclotomicElement v;
  std::array<CyclotomicElement, 3> d;

  explicit Jet(int conductor)
      : v(conductor), d{CyclotomicElement(conductor), CyclotomicElement(conductor), CyclotomicElement(conductor)} {}
};

Jet operator*(const Jet& x, const Jet& y) {
  Jet out(x.v.conductor());
  out.v = x.v * y.v;
  for (std::size_t j = 0; j < 3; ++j) out.d[j] = x.v * y.d[j] + y.v * x.d[j];
  return out;
}

void add_side(const Triple& t, Side side, std::vector<StratumData>& out) {
  const std::int64_t aq = std::abs(t.t1);
  const std::array<std::int64_t, 3> w{4, t.t2 - t.t3, t.t2 + t.t3};
  for (std::int64_t k = 1; k <= (aq - 1) / 2; ++k) {
    StratumData st;
    st.side = side;
    st.q = t.t1;
    st.k = k;
    st.weights = w;
    for (std::size_t j = 0; j < 3; ++j) {
      st.theta_num[j] = 2 * w[j] * k;
      // Chern numbers are -w/q; the orientation rule multiplies by sign(q).
      st.chern[j] = Rational(Integer(static_cast<long>(-w[j])), Integer(static_cast<long>(aq)));
    }
    st.sigma = 1;
    st.epsilon = stratum_epsilon(st);
    out.push_back(std::move(st));
  }
}

Rational side_sum(const std::vector<StratumData>& all, Side side, std::int64_t q, CschArgument conv) {
  const int conductor = static_cast<int>(4 * std::abs(q));
  CyclotomicElement acc(conductor);
  for (const auto& st : all) {
    if (st.side != side) continue;
    acc += stratum_integral(st, conv) * Rational(st.sigma);
  }
  try {
    return to_rational(acc);
  } catch (const NotRational& e) {
    throw InvariantViolation(std::string("stratum sum is ") + e.what());
  }
}

}  // namespace

std::vector<StratumData> strata(const ParamPair& pair) {
  validate_pair(pair.a, pair.b);
  std::vector<StratumData> out;
  add_side(pair.a, Side::Minus, out);
  add_side(pair.b, Side::Plus, out);
  return out;
}

int stratum_epsilon(const StratumData& st) {
  const std::int64_t aq = std::abs(st.q);
  const std::int64_t g = std::gcd(st.k, aq);
  // r theta_j / 2 = pi theta_num_j / (2 g), a multiple of pi for a group element.
  int sign = 1;
  for (std::int64_t t : st.theta_num) {
    if (t % (2 * g) != 0) throw InputError("stratum angles are not those of a group element of order dividing |q|");
    if ((t / (2 * g)) % 2 != 0) sign = -sign;
  }
  return sign;
}

CyclotomicElement stratum_integral(const StratumData& st, CschArgument convention) {
  const std::int64_t aq = std::abs(st.q);
  const int conductor = static_cast<int>(4 * aq);
  const CyclotomicElement one(conductor, Rational(1));
  const int epsilon = stratum_epsilon(st);

  Jet a_hat(conductor);
  Jet ell(conductor);
  a_hat.v = one;
  ell.v = one;
  for (std::size_t j = 0; j < 3; ++j) {
    // alpha = theta/2 = 2 pi theta_num / (4|q|), so z = e^{i alpha} = zeta^theta_num.
    const CyclotomicElement z = CyclotomicElement::root_of_unity(conductor, st.theta_num[j]);
    const CyclotomicElement u = z * z;
    const CyclotomicElement denom = u - one;
    if (denom.is_zero()) {
      throw DegenerateDefect("degenerate stratum: sin(theta/2) = 0 at k = " + std::to_string(st.k));
    }
    const CyclotomicElement inv = one / denom;
    const CyclotomicElement coth = (u + one) * inv;  // coth(i alpha)
    const CyclotomicElement csch = z * inv * Rational(2);  // csch(i alpha)

    Jet fl(conductor);
    fl.v = coth;
    fl.d[j] = one - coth * coth;

    Jet fa(conductor);
    fa.v = csch * Rational(Integer(1), Integer(2));
    const Rational slope = convention == CschArgument::Half ? Rational(Integer(-1), Integer(4))
                                                            : Rational(Integer(-1), Integer(2));
    fa.d[j] = csch * coth * slope;

    ell = ell * fl;
    a_hat = a_hat * fa;
  }

  CyclotomicElement total(conductor);
  const Rational l_scale(Integer(1), Integer(224));
  for (std::size_t j = 0; j < 3; ++j) {
    CyclotomicElement term = a_hat.d[j] * Rational(epsilon) + ell.d[j] * l_scale;
    total += term * st.chern[j];
  }
  if (!total.is_real()) throw InvariantViolation("stratum integral has a nonzero imaginary part");
  return total;
}

CyclotomicElement stratum_integral(const StratumData& st) {
  return stratum_integral(st, calibrated_convention());
}

Rational lambda_s_integral(const ParamPair& pair, CschArgument convention) {
  const auto all = strata(pair);
  const Rational minus = side_sum(all, Side::Minus, pair.a.t1, convention);
  const Rational plus = side_sum(all, Side::Plus, pair.b.t1, convention);
  return -minus / Rational(std::abs(pair.a.t1)) + plus / Rational(std::abs(pair.b.t1));
}

Rational lambda_s_integral(const ParamPair& pair) { return lambda_s_integral(pair, calibrated_convention()); }

CschArgument calibrated_convention() {
  static std::once_flag once;
  static std::optional<CschArgument> chosen;
  std::call_once(once, [] {
    const ParamPair cal = validate_pair({-3, -3, 1}, {1, 1, 1});
    const Rational target = defect_D_exact({-3, 4, -2, 4}) - defect_D_exact({1, 4, 2, 0});
    for (CschArgument c : {CschArgument::Half, CschArgument::Full}) {
      if (lambda_s_integral(cal, c) == target) {
        chosen = c;
        return;
      }
    }
  });
  if (!chosen) throw InvariantViolation("no csch convention reproduces the calibration pair");
  return *chosen;
}

OracleReport oracle_check(const ParamPair& pair) {
  OracleReport r;
  r.pair = validate_pair(pair.a, pair.b);
  const Triple& a = pair.a;
  const Triple& b = pair.b;
  r.strata = strata(pair);
  r.lambda_s = lambda_s_integral(pair);
  r.oracle = -r.lambda_s;
  r.defect_minus = defect_D_exact({a.t1, 4, a.t3 + a.t2, a.t3 - a.t2});
  r.defect_plus = defect_D_exact({b.t1, 4, b.t3 + b.t2, b.t3 - b.t2});
  r.closed_form = defect_D_exact({a.t1, 4, a.t2 - a.t3, a.t2 + a.t3}) -
                  defect_D_exact({b.t1, 4, b.t2 - b.t3, b.t2 + b.t3});
  r.equal = r.oracle == r.closed_form && r.lambda_s == r.defect_minus - r.defect_plus;
  for (const auto& st : r.strata) r.stratum_values.push_back(stratum_integral(st).embed());
  return r;
}

}  // namespace seveninv
