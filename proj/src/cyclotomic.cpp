#include "seveninv/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>

namespace seveninv {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

IntPolynomial exact_divide(const IntPolynomial& dividend, const IntPolynomial& divisor) {
  // divisor is monic
  IntPolynomial rem = dividend;
  const std::size_t dd = divisor.size() - 1;
  const std::size_t qd = rem.size() - 1 - dd;
  IntPolynomial quot(qd + 1);
  for (std::size_t k = qd + 1; k-- > 0;) {
    const Integer c = rem[k + dd];
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= c * divisor[j];
  }
  for (std::size_t j = 0; j < dd; ++j) {
    if (rem[j] != 0) throw InvariantViolation("cyclotomic division left a remainder");
  }
  return quot;
}

int bit_length_u64(std::uint64_t v) { return v == 0 ? 0 : 64 - __builtin_clzll(v); }

void set_i128(Integer& out, i128 v) {
  if (v >= INT64_MIN && v <= INT64_MAX) {
    mpz_set_si(out.get_mpz_t(), static_cast<long>(v));
    return;
  }
  const bool neg = v < 0;
  const u128 mag = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  mpz_set_ui(out.get_mpz_t(), static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), 64);
  mpz_add_ui(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  if (neg) mpz_neg(out.get_mpz_t(), out.get_mpz_t());
}

// Copies into int64 when every entry fits; reports the largest bit length.
bool narrow(const std::vector<Integer>& v, std::vector<std::int64_t>& out, int& max_bits) {
  out.resize(v.size());
  max_bits = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].fits_slong_p()) return false;
    out[k] = v[k].get_si();
    const std::uint64_t mag = out[k] < 0 ? static_cast<std::uint64_t>(-(out[k] + 1)) + 1
                                         : static_cast<std::uint64_t>(out[k]);
    max_bits = std::max(max_bits, bit_length_u64(mag));
  }
  return true;
}

void addmul_si(mpz_t rop, const mpz_t op, std::int64_t s) {
  if (s >= 0) {
    mpz_addmul_ui(rop, op, static_cast<unsigned long>(s));
  } else {
    mpz_submul_ui(rop, op, static_cast<unsigned long>(-(s + 1)) + 1UL);
  }
}

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// In-place: rem <- rem mod div, returns quotient. div is monic and nonempty.
QPoly divmod_monic(QPoly& rem, const QPoly& div) {
  const std::size_t dd = div.size() - 1;
  if (rem.size() < div.size()) return {};
  const std::size_t qd = rem.size() - 1 - dd;
  QPoly quot(qd + 1);
  for (std::size_t k = qd + 1; k-- > 0;) {
    const mpq_class c = rem[k + dd];
    quot[k] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= c * div[j];
  }
  rem.resize(dd);
  trim(rem);
  return quot;
}

QPoly sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  // a - q * b
  QPoly out(std::max(a.size(), q.empty() || b.empty() ? 0 : q.size() + b.size() - 1));
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k];
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (sgn(q[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  }
  trim(out);
  return out;
}

void scale(QPoly& p, const mpq_class& s) {
  for (auto& c : p) c *= s;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

int euler_phi(int n) {
  if (n < 1) throw InputError("euler_phi requires n >= 1");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const IntPolynomial& cyclotomic_polynomial(int n) {
  if (n < 1) throw InputError("cyclotomic_polynomial requires N >= 1");
  static std::map<int, IntPolynomial> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  IntPolynomial p(static_cast<std::size_t>(n) + 1);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = exact_divide(p, cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(cache_mutex());
  return cache.emplace(n, std::move(p)).first->second;
}

namespace detail {

std::shared_ptr<const FieldData> field_data(int conductor) {
  if (conductor < 1) throw InputError("conductor must be >= 1");
  static std::map<int, std::shared_ptr<const FieldData>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache.find(conductor);
    if (it != cache.end()) return it->second;
  }
  const IntPolynomial& phi_poly = cyclotomic_polynomial(conductor);
  auto data = std::make_shared<FieldData>();
  data->conductor = conductor;
  data->degree = static_cast<int>(phi_poly.size()) - 1;
  const int deg = data->degree;
  const int rows = std::max(conductor, 2 * deg - 1);
  std::vector<Integer> row(static_cast<std::size_t>(deg));
  row[0] = 1;
  data->power_table.reserve(static_cast<std::size_t>(rows));
  for (int e = 0; e < rows; ++e) {
    if (e > 0) {
      const Integer top = row[static_cast<std::size_t>(deg - 1)];
      for (int k = deg - 1; k > 0; --k) row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k - 1)];
      row[0] = 0;
      if (top != 0) {
        for (int k = 0; k < deg; ++k) row[static_cast<std::size_t>(k)] -= top * phi_poly[static_cast<std::size_t>(k)];
      }
    }
    std::vector<std::int64_t> narrow_row(static_cast<std::size_t>(deg));
    for (int k = 0; k < deg; ++k) {
      const Integer& c = row[static_cast<std::size_t>(k)];
      if (!c.fits_slong_p()) throw InvariantViolation("power table entry exceeds 64 bits");
      narrow_row[static_cast<std::size_t>(k)] = c.get_si();
      data->table_height = std::max<std::int64_t>(data->table_height, std::abs(c.get_si()));
    }
    data->power_table.push_back(std::move(narrow_row));
  }
  std::lock_guard<std::mutex> lock(cache_mutex());
  return cache.emplace(conductor, std::move(data)).first->second;
}

}  // namespace detail

// ---------------------------------------------------------------------------

CyclotomicElement::CyclotomicElement(int conductor)
    : field_(detail::field_data(conductor)), num_(static_cast<std::size_t>(field_->degree)) {}

CyclotomicElement::CyclotomicElement(int conductor, const Rational& value)
    : CyclotomicElement(conductor) {
  num_[0] = value.num();
  den_ = value.den();
}

CyclotomicElement::CyclotomicElement(std::shared_ptr<const detail::FieldData> field,
                                     std::vector<Integer> num, Integer den)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void CyclotomicElement::normalize() {
  if (sgn(den_) < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return c == 0; })) {
    den_ = 1;
    return;
  }
  if (den_ == 1) return;
  Integer g = den_;
  for (const auto& c : num_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

void CyclotomicElement::require_same_field(const CyclotomicElement& rhs) const {
  if (conductor() != rhs.conductor()) throw ConductorMismatch(conductor(), rhs.conductor());
}

CyclotomicElement CyclotomicElement::root_of_unity(int conductor, std::int64_t exponent) {
  auto field = detail::field_data(conductor);
  const auto& row = field->power_table[static_cast<std::size_t>(mod_pos(exponent, conductor))];
  std::vector<Integer> num(row.size());
  for (std::size_t k = 0; k < row.size(); ++k) num[k] = static_cast<long>(row[k]);
  return CyclotomicElement(std::move(field), std::move(num), Integer(1));
}

CyclotomicElement CyclotomicElement::from_coefficients(int conductor,
                                                       const std::vector<Rational>& coeffs) {
  auto field = detail::field_data(conductor);
  if (coeffs.size() != static_cast<std::size_t>(field->degree)) {
    throw InputError("coefficient vector length must equal phi(N) = " +
                     std::to_string(field->degree));
  }
  Integer den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
  std::vector<Integer> num(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) num[k] = coeffs[k].num() * (den / coeffs[k].den());
  return CyclotomicElement(std::move(field), std::move(num), std::move(den));
}

CyclotomicElement CyclotomicElement::from_exponent_sum(int conductor,
                                                       const std::vector<std::int64_t>& weights,
                                                       std::int64_t denominator) {
  if (denominator == 0) throw DivisionByZero();
  auto field = detail::field_data(conductor);
  if (weights.size() != static_cast<std::size_t>(conductor)) {
    throw InputError("exponent weights must have length N");
  }
  const auto deg = static_cast<std::size_t>(field->degree);
  std::uint64_t total = 0;
  for (std::int64_t w : weights) {
    total += w < 0 ? static_cast<std::uint64_t>(-(w + 1)) + 1 : static_cast<std::uint64_t>(w);
    if (total >= (std::uint64_t{1} << 62)) throw InputError("exponent weights too large");
  }
  std::vector<Integer> num(deg);
  // |sum w_e row_e[k]| <= total * height, well inside 128 bits.
  thread_local std::vector<i128> acc;
  acc.assign(deg, 0);
  for (std::size_t e = 0; e < weights.size(); ++e) {
    if (weights[e] == 0) continue;
    const auto& row = field->power_table[e];
    const i128 w = weights[e];
    for (std::size_t k = 0; k < deg; ++k) acc[k] += w * row[k];
  }
  for (std::size_t k = 0; k < deg; ++k) set_i128(num[k], acc[k]);
  return CyclotomicElement(std::move(field), std::move(num), Integer(static_cast<long>(denominator)));
}

CyclotomicElement CyclotomicElement::from_exponent_sum(int conductor,
                                                       const std::vector<Integer>& weights,
                                                       const Integer& denominator) {
  if (sgn(denominator) == 0) throw DivisionByZero();
  if (weights.size() != static_cast<std::size_t>(conductor)) {
    throw InputError("exponent weights must have length N");
  }
  std::vector<std::int64_t> small;
  int bits = 0;
  if (narrow(weights, small, bits) && bits < 40 && denominator.fits_slong_p()) {
    return from_exponent_sum(conductor, small, denominator.get_si());
  }
  auto field = detail::field_data(conductor);
  const auto deg = static_cast<std::size_t>(field->degree);
  std::vector<Integer> num(deg);
  for (std::size_t e = 0; e < weights.size(); ++e) {
    if (weights[e] == 0) continue;
    const auto& row = field->power_table[e];
    for (std::size_t k = 0; k < deg; ++k) {
      addmul_si(num[k].get_mpz_t(), weights[e].get_mpz_t(), row[k]);
    }
  }
  return CyclotomicElement(std::move(field), std::move(num), denominator);
}

std::vector<Rational> CyclotomicElement::coeffs() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (const auto& c : num_) out.emplace_back(c, den_);
  return out;
}

Rational CyclotomicElement::coeff(int k) const {
  if (k < 0 || k >= degree()) throw InputError("coefficient index out of range");
  return Rational(num_[static_cast<std::size_t>(k)], den_);
}

bool CyclotomicElement::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return c == 0; });
}

bool CyclotomicElement::is_rational() const {
  return std::all_of(num_.begin() + 1, num_.end(), [](const Integer& c) { return c == 0; });
}

CyclotomicElement CyclotomicElement::conjugate() const {
  const int n = conductor();
  std::vector<Integer> weights(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < num_.size(); ++k) {
    weights[static_cast<std::size_t>(mod_pos(-static_cast<std::int64_t>(k), n))] += num_[k];
  }
  return from_exponent_sum(n, weights, den_);
}

CyclotomicElement CyclotomicElement::galois(std::int64_t k) const {
  const int n = conductor();
  const std::int64_t kk = mod_pos(k, n);
  if (std::gcd(kk, static_cast<std::int64_t>(n)) != 1) {
    throw InputError("galois: " + std::to_string(k) + " is not a unit mod " + std::to_string(n));
  }
  std::vector<Integer> weights(static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < num_.size(); ++e) {
    if (num_[e] != 0) weights[static_cast<std::size_t>((kk * static_cast<std::int64_t>(e)) % n)] += num_[e];
  }
  return from_exponent_sum(n, weights, den_);
}

// x^{-1} = prod_{sigma != 1} sigma(x) / N(x), with N(x) the field norm. Only
// integer polynomial products are needed, which avoids the coefficient
// growth of a Euclidean remainder sequence over Q.
CyclotomicElement CyclotomicElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return CyclotomicElement(conductor(), Rational(den_, num_[0]));
  const CyclotomicElement x(field_, num_, Integer(1));
  CyclotomicElement cofactor(conductor(), Rational(1));
  for (int k = 2; k < conductor(); ++k) {
    if (std::gcd(k, conductor()) == 1) cofactor *= x.galois(k);
  }
  const CyclotomicElement norm = x * cofactor;
  if (!norm.is_rational() || norm.is_zero()) throw InvariantViolation("field norm is not a nonzero rational");
  // x = X / den_ and X^{-1} = cofactor / N(X).
  return cofactor * Rational(den_ * norm.den_, norm.num_[0]);
}

CyclotomicElement detail::inverse_by_euclid(const CyclotomicElement& x) {
  if (x.is_zero()) throw DivisionByZero();
  const IntPolynomial& phi_poly = cyclotomic_polynomial(x.conductor());
  const std::vector<Rational> xc = x.coeffs();

  QPoly r0(phi_poly.size());
  for (std::size_t k = 0; k < phi_poly.size(); ++k) r0[k] = phi_poly[k];
  QPoly r1(xc.size());
  for (std::size_t k = 0; k < xc.size(); ++k) r1[k] = xc[k].raw();
  trim(r1);

  // Invariant: s_i * x == r_i (mod Phi_N), with r1 kept monic.
  QPoly s0;
  QPoly s1{mpq_class(1)};
  {
    const mpq_class lead_inv = 1 / r1.back();
    scale(r1, lead_inv);
    scale(s1, lead_inv);
  }
  while (r1.size() > 1) {
    QPoly rem = r0;
    QPoly quot = divmod_monic(rem, r1);
    if (rem.empty()) throw InvariantViolation("cyclotomic polynomial has a proper factor");
    QPoly s2 = sub_mul(s0, quot, s1);
    const mpq_class lead_inv = 1 / rem.back();
    scale(rem, lead_inv);
    scale(s2, lead_inv);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(x.degree()));
  for (std::size_t k = 0; k < s1.size() && k < coeffs.size(); ++k) {
    coeffs[k] = Rational(s1[k].get_num(), s1[k].get_den());
  }
  return CyclotomicElement::from_coefficients(x.conductor(), coeffs);
}

std::complex<double> CyclotomicElement::embed() const {
  const double step = 2.0 * std::numbers::pi / conductor();
  long double re = 0;
  long double im = 0;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    const double c = mpq_class(num_[k], den_).get_d();
    re += c * std::cos(step * static_cast<double>(k));
    im += c * std::sin(step * static_cast<double>(k));
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& rhs) {
  require_same_field(rhs);
  if (den_ == rhs.den_) {
    for (std::size_t k = 0; k < num_.size(); ++k) num_[k] += rhs.num_[k];
  } else {
    Integer g;
    mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), rhs.den_.get_mpz_t());
    const Integer lf = rhs.den_ / g;
    const Integer rf = den_ / g;
    for (std::size_t k = 0; k < num_.size(); ++k) {
      num_[k] *= lf;
      mpz_addmul(num_[k].get_mpz_t(), rhs.num_[k].get_mpz_t(), rf.get_mpz_t());
    }
    den_ *= lf;
  }
  normalize();
  return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& rhs) {
  return *this += -rhs;
}

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& rhs) {
  require_same_field(rhs);
  const auto deg = static_cast<std::size_t>(degree());
  const auto& table = field_->power_table;

  // Fast path: every intermediate is bounded by
  // 2^(bx+by) * deg * (1 + deg * height) < 2^127.
  thread_local std::vector<std::int64_t> xs;
  thread_local std::vector<std::int64_t> ys;
  int bx = 0;
  int by = 0;
  const int margin = 2 * bit_length_u64(deg) +
                     bit_length_u64(static_cast<std::uint64_t>(field_->table_height) + 1);
  if (narrow(num_, xs, bx) && narrow(rhs.num_, ys, by) && bx + by + margin < 125) {
    thread_local std::vector<i128> conv;
    conv.assign(2 * deg - 1, 0);
    for (std::size_t i = 0; i < deg; ++i) {
      if (xs[i] == 0) continue;
      const i128 xi = xs[i];
      for (std::size_t j = 0; j < deg; ++j) conv[i + j] += xi * ys[j];
    }
    for (std::size_t e = deg; e < conv.size(); ++e) {
      if (conv[e] == 0) continue;
      const auto& row = table[e];
      for (std::size_t k = 0; k < deg; ++k) conv[k] += conv[e] * row[k];
    }
    for (std::size_t k = 0; k < deg; ++k) set_i128(num_[k], conv[k]);
  } else {
    std::vector<Integer> conv(2 * deg - 1);
    for (std::size_t i = 0; i < deg; ++i) {
      if (num_[i] == 0) continue;
      for (std::size_t j = 0; j < deg; ++j) {
        mpz_addmul(conv[i + j].get_mpz_t(), num_[i].get_mpz_t(), rhs.num_[j].get_mpz_t());
      }
    }
    for (std::size_t e = deg; e < conv.size(); ++e) {
      if (conv[e] == 0) continue;
      const auto& row = table[e];
      for (std::size_t k = 0; k < deg; ++k) addmul_si(conv[k].get_mpz_t(), conv[e].get_mpz_t(), row[k]);
    }
    for (std::size_t k = 0; k < deg; ++k) num_[k].swap(conv[k]);
  }
  den_ *= rhs.den_;
  normalize();
  return *this;
}

CyclotomicElement& CyclotomicElement::operator/=(const CyclotomicElement& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

CyclotomicElement& CyclotomicElement::operator*=(const Rational& rhs) {
  for (auto& c : num_) c *= rhs.num();
  den_ *= rhs.den();
  normalize();
  return *this;
}

CyclotomicElement CyclotomicElement::operator-() const {
  CyclotomicElement out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

bool operator==(const CyclotomicElement& lhs, const CyclotomicElement& rhs) {
  return lhs.conductor() == rhs.conductor() && lhs.den_ == rhs.den_ && lhs.num_ == rhs.num_;
}

// ---------------------------------------------------------------------------

namespace {

std::string describe(const std::vector<Rational>& coefficients) {
  std::string out = "not rational: [";
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (k) out += ", ";
    out += coefficients[k].str();
  }
  return out + "]";
}

}  // namespace

NotRational::NotRational(std::vector<Rational> coefficients)
    : Error(describe(coefficients)), coefficients_(std::move(coefficients)) {}

Rational to_rational(const CyclotomicElement& x) {
  if (!x.is_rational()) throw NotRational(x.coeffs());
  return x.coeff(0);
}

CyclotomicElement cyc_arith(const CyclotomicElement& x, const CyclotomicElement& y, CycOp op) {
  switch (op) {
    case CycOp::Add:
      return x + y;
    case CycOp::Sub:
      return x - y;
    case CycOp::Mul:
      return x * y;
    case CycOp::Div:
      return x / y;
  }
  throw InputError("unknown cyclotomic operation");
}

CyclotomicElement imaginary_unit(int conductor) {
  if (conductor % 4 != 0) throw InputError("i lies in Q(zeta_N) only for 4 | N");
  return CyclotomicElement::root_of_unity(conductor, conductor / 4);
}

namespace {

// Exponent e with zeta_N^e = exp(i pi a / b).
std::int64_t half_turn_exponent(std::int64_t a, std::int64_t b, int conductor) {
  if (b < 1) throw InputError("angle denominator must be >= 1");
  if (conductor % (2 * b) != 0) {
    throw InputError("conductor " + std::to_string(conductor) + " is not a multiple of 2b = " +
                     std::to_string(2 * b));
  }
  return mod_pos(a, 2 * b) * (conductor / (2 * b));
}

}  // namespace

CyclotomicElement cos_pi(std::int64_t a, std::int64_t b) {
  if (b < 1) throw InputError("angle denominator must be >= 1");
  return cos_pi(a, b, static_cast<int>(2 * b));
}

CyclotomicElement cos_pi(std::int64_t a, std::int64_t b, int conductor) {
  const std::int64_t e = half_turn_exponent(a, b, conductor);
  std::vector<std::int64_t> w(static_cast<std::size_t>(conductor));
  w[static_cast<std::size_t>(e)] += 1;
  w[static_cast<std::size_t>(mod_pos(-e, conductor))] += 1;
  return CyclotomicElement::from_exponent_sum(conductor, w, 2);
}

CyclotomicElement sin_pi(std::int64_t a, std::int64_t b) {
  if (b < 1) throw InputError("angle denominator must be >= 1");
  return cos_pi(b - 2 * mod_pos(a, 2 * b), 2 * b);
}

CyclotomicElement sin_pi(std::int64_t a, std::int64_t b, int conductor) {
  if (conductor % 4 != 0) throw InputError("sin_pi needs 4 | N");
  const std::int64_t e = half_turn_exponent(a, b, conductor);
  const std::int64_t quarter = conductor / 4;
  // sin = -i (z - 1/z) / 2
  std::vector<std::int64_t> w(static_cast<std::size_t>(conductor));
  w[static_cast<std::size_t>(mod_pos(quarter + e, conductor))] -= 1;
  w[static_cast<std::size_t>(mod_pos(quarter - e, conductor))] += 1;
  return CyclotomicElement::from_exponent_sum(conductor, w, 2);
}

CyclotomicElement inv_sin_pi(std::int64_t a, std::int64_t b, int conductor) {
  if (conductor % 4 != 0) throw InputError("inv_sin_pi needs 4 | N");
  const std::int64_t e = half_turn_exponent(a, b, conductor);
  const std::int64_t u = mod_pos(2 * e, conductor);
  if (u == 0) throw DivisionByZero();
  const std::int64_t order = conductor / std::gcd(u, static_cast<std::int64_t>(conductor));
  // 1/sin = 2 i z / (z^2 - 1) = (2/r) sum_j j zeta^{N/4 + e + 2 e j}
  std::vector<std::int64_t> w(static_cast<std::size_t>(conductor));
  const std::int64_t base = conductor / 4 + e;
  for (std::int64_t j = 1; j < order; ++j) {
    w[static_cast<std::size_t>(mod_pos(base + u * j, conductor))] += 2 * j;
  }
  return CyclotomicElement::from_exponent_sum(conductor, w, order);
}

}  // namespace seveninv
