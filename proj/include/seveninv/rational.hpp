#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace seveninv {

using Integer = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Zero is stored as 0/1. All arithmetic is exact; division by zero throws
/// DivisionByZero.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: implicit by design of numeric types
  Rational(const Integer& value) : value_(value) {}  // NOLINT
  Rational(const Integer& num, const Integer& den);

  const Integer& num() const { return value_.get_num(); }
  const Integer& den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return den() == 1; }
  int sign() const { return sgn(value_); }

  Rational abs() const;
  /// Largest integer not exceeding the value.
  Integer floor() const;
  /// Representative of the class mod Z in [0, 1).
  Rational frac() const;
  double to_double() const { return value_.get_d(); }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;
  /// Parses "p/q" or "p". Throws InputError on malformed text.
  static Rational parse(const std::string& text);

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Builds n/d in canonical form; throws DivisionByZero when d == 0.
Rational rat_normalize(const Integer& n, const Integer& d);

/// Floor division and the matching non-negative remainder for d > 0.
Integer floor_div(const Integer& n, const Integer& d);
Integer mod_floor(const Integer& n, const Integer& d);

std::string to_string(const Integer& value);

/// True when value fits in a signed 64-bit integer.
bool fits_int64(const Integer& value);
std::int64_t to_int64(const Integer& value);

}  // namespace seveninv
