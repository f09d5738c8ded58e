#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "seveninv/errors.hpp"
#include "seveninv/rational.hpp"

namespace seveninv {

/// Integer polynomial, coefficient of x^k stored at index k.
using IntPolynomial = std::vector<Integer>;

int euler_phi(int n);

/// The n-th cyclotomic polynomial, obtained by exact division of x^n - 1 by
/// Phi_d for every proper divisor d of n. Results are memoized.
const IntPolynomial& cyclotomic_polynomial(int n);

namespace detail {

// Per-conductor data shared by all elements of Q(zeta_N). Built once and never
// mutated afterwards.
struct FieldData {
  int conductor = 0;
  int degree = 0;  // phi(N)
  // Row e holds x^e mod Phi_N, for e in [0, max(N, 2 phi - 1)).
  std::vector<std::vector<std::int64_t>> power_table;
  std::int64_t table_height = 0;  // max |entry| of power_table
};

std::shared_ptr<const FieldData> field_data(int conductor);

}  // namespace detail

/// Exact element of the cyclotomic field Q(zeta_N), in the power basis
/// 1, zeta, ..., zeta^{phi(N)-1} reduced modulo Phi_N.
///
/// Internally stored as integer numerators over one positive common
/// denominator with no common factor, so equal field elements have identical
/// representations.
class CyclotomicElement {
 public:
  explicit CyclotomicElement(int conductor);
  CyclotomicElement(int conductor, const Rational& value);

  /// zeta_N^exponent; any integer exponent is accepted.
  static CyclotomicElement root_of_unity(int conductor, std::int64_t exponent);
  static CyclotomicElement from_coefficients(int conductor, const std::vector<Rational>& coeffs);
  /// (sum_e weights[e] zeta^e) / denominator with weights indexed by exponent
  /// mod N (so weights.size() == N).
  static CyclotomicElement from_exponent_sum(int conductor, const std::vector<Integer>& weights,
                                             const Integer& denominator);
  /// Same, for weights whose absolute sum stays below 2^62.
  static CyclotomicElement from_exponent_sum(int conductor, const std::vector<std::int64_t>& weights,
                                             std::int64_t denominator);

  int conductor() const { return field_->conductor; }
  int degree() const { return field_->degree; }

  std::vector<Rational> coeffs() const;
  Rational coeff(int k) const;
  bool is_zero() const;
  bool is_rational() const;

  /// Complex conjugation, zeta -> zeta^{-1}.
  CyclotomicElement conjugate() const;
  bool is_real() const { return conjugate() == *this; }
  /// Multiplicative inverse as the product of the nontrivial Galois
  /// conjugates divided by the field norm.
  CyclotomicElement inverse() const;
  /// The automorphism zeta -> zeta^k; k must be a unit mod N.
  CyclotomicElement galois(std::int64_t k) const;

  /// Value under the canonical embedding zeta_N -> exp(2 pi i / N).
  std::complex<double> embed() const;

  CyclotomicElement& operator+=(const CyclotomicElement& rhs);
  CyclotomicElement& operator-=(const CyclotomicElement& rhs);
  CyclotomicElement& operator*=(const CyclotomicElement& rhs);
  CyclotomicElement& operator/=(const CyclotomicElement& rhs);
  CyclotomicElement& operator*=(const Rational& rhs);

  friend CyclotomicElement operator+(CyclotomicElement lhs, const CyclotomicElement& rhs) {
    return lhs += rhs;
  }
  friend CyclotomicElement operator-(CyclotomicElement lhs, const CyclotomicElement& rhs) {
    return lhs -= rhs;
  }
  friend CyclotomicElement operator*(CyclotomicElement lhs, const CyclotomicElement& rhs) {
    return lhs *= rhs;
  }
  friend CyclotomicElement operator/(CyclotomicElement lhs, const CyclotomicElement& rhs) {
    return lhs /= rhs;
  }
  friend CyclotomicElement operator*(CyclotomicElement lhs, const Rational& rhs) {
    return lhs *= rhs;
  }
  friend CyclotomicElement operator*(const Rational& lhs, CyclotomicElement rhs) {
    return rhs *= lhs;
  }
  CyclotomicElement operator-() const;

  friend bool operator==(const CyclotomicElement& lhs, const CyclotomicElement& rhs);

 private:
  CyclotomicElement(std::shared_ptr<const detail::FieldData> field, std::vector<Integer> num,
                    Integer den);
  void normalize();
  void require_same_field(const CyclotomicElement& rhs) const;

  std::shared_ptr<const detail::FieldData> field_;
  std::vector<Integer> num_;
  Integer den_{1};
};

namespace detail {
/// Inverse through the extended Euclidean algorithm over Q[x]; kept as an
/// independent cross-check of CyclotomicElement::inverse.
CyclotomicElement inverse_by_euclid(const CyclotomicElement& x);
}  // namespace detail

/// Raised by to_rational on an element with a nonzero non-constant coordinate.
class NotRational : public Error {
 public:
  explicit NotRational(std::vector<Rational> coefficients);
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }

 private:
  std::vector<Rational> coefficients_;
};

Rational to_rational(const CyclotomicElement& x);

enum class CycOp { Add, Sub, Mul, Div };
CyclotomicElement cyc_arith(const CyclotomicElement& x, const CyclotomicElement& y, CycOp op);

/// i = zeta_N^{N/4}; requires 4 | N.
CyclotomicElement imaginary_unit(int conductor);

/// cos(pi a / b) in Q(zeta_{2b}).
CyclotomicElement cos_pi(std::int64_t a, std::int64_t b);
/// cos(pi a / b) embedded in Q(zeta_N); requires 2b | N.
CyclotomicElement cos_pi(std::int64_t a, std::int64_t b, int conductor);
/// sin(pi a / b) = cos(pi (b - 2a) / (2b)) in Q(zeta_{4b}).
CyclotomicElement sin_pi(std::int64_t a, std::int64_t b);
/// sin(pi a / b) embedded in Q(zeta_N); requires 2b | N and 4 | N.
CyclotomicElement sin_pi(std::int64_t a, std::int64_t b, int conductor);
/// 1 / sin(pi a / b) in Q(zeta_N) from the identity
/// 1/(u - 1) = (1/r) sum_{j<r} j u^j for u of exact order r > 1.
/// Requires 2b | N and 4 | N; throws DivisionByZero when the sine vanishes.
CyclotomicElement inv_sin_pi(std::int64_t a, std::int64_t b, int conductor);

}  // namespace seveninv
