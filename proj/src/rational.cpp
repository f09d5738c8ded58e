#include "seveninv/rational.hpp"

#include <ostream>

#include "seveninv/errors.hpp"

namespace seveninv {

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::abs() const {
  Rational out;
  out.value_ = ::abs(value_);
  return out;
}

Integer Rational::floor() const { return floor_div(num(), den()); }

Rational Rational::frac() const { return Rational(mod_floor(num(), den()), den()); }

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  try {
    if (slash == std::string::npos) {
      num = Integer(text);
    } else {
      num = Integer(text.substr(0, slash));
      den = Integer(text.substr(slash + 1));
    }
  } catch (const std::invalid_argument&) {
    throw InputError("malformed rational '" + text + "'");
  }
  return rat_normalize(num, den);
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

Rational rat_normalize(const Integer& n, const Integer& d) { return Rational(n, d); }

Integer floor_div(const Integer& n, const Integer& d) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

Integer mod_floor(const Integer& n, const Integer& d) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}

std::string to_string(const Integer& value) { return value.get_str(); }

bool fits_int64(const Integer& value) {
  static_assert(sizeof(long) == 8, "expects LP64");
  return value.fits_slong_p();
}

std::int64_t to_int64(const Integer& value) {
  if (!fits_int64(value)) throw InputError("integer out of 64-bit range: " + value.get_str());
  return value.get_si();
}

}  // namespace seveninv
