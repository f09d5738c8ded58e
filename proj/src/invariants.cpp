#include "seveninv/invariants.hpp"

#include <numeric>
#include <sstream>

#include "seveninv/defect.hpp"
#include "seveninv/errors.hpp"

namespace seveninv {

namespace {

Integer sq(const Integer& x) { return x * x; }
Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }

Integer gcd3(const Integer& x, const Integer& y, const Integer& z) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  return g;
}

Integer gcd2(const Integer& x, const Integer& y) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

bool one_mod_four(std::int64_t t) { return ((t % 4) + 4) % 4 == 1; }

void triple_violations(const Triple& t, const char* name, std::vector<std::string>& out) {
  const std::string n(name);
  const std::int64_t v[3] = {t.t1, t.t2, t.t3};
  for (int i = 0; i < 3; ++i) {
    if (!one_mod_four(v[i])) {
      out.push_back(n + std::to_string(i + 1) + " = " + std::to_string(v[i]) + " ≢ 1 mod 4");
    }
  }
  const Integer g = gcd3(big(t.t1), big(t.t2), big(t.t3));
  if (g != 1) out.push_back("gcd(" + n + "1," + n + "2," + n + "3) = " + g.get_str());
  const Integer minus = big(t.t2) - big(t.t3);
  const Integer plus = big(t.t2) + big(t.t3);
  const Integer gm = gcd2(big(t.t1), minus);
  const Integer gp = gcd2(big(t.t1), plus);
  if (gm != 1) {
    out.push_back("gcd(" + n + "1, " + n + "2-" + n + "3) = gcd(" + std::to_string(t.t1) + "," +
                  minus.get_str() + ") = " + gm.get_str());
  }
  if (gp != 1) {
    out.push_back("gcd(" + n + "1, " + n + "2+" + n + "3) = gcd(" + std::to_string(t.t1) + "," +
                  plus.get_str() + ") = " + gp.get_str());
  }
}

void require_valid(const ParamPair& pair) {
  if (pair.validated) return;
  auto v = pair_violations(pair.a, pair.b);
  if (!v.empty()) throw InvalidParameters(std::move(v));
}

Integer require_nonzero_n(const ParamPair& pair) {
  Integer n = h4_order(pair);
  if (n == 0) throw DegenerateEuler();
  return n;
}

// Recursive extended Euclid on x, y >= 0: returns (g, s, t) with s x + t y = g.
void ext_gcd(const Integer& x, const Integer& y, Integer& g, Integer& s, Integer& t) {
  if (y == 0) {
    g = x;
    s = 1;
    t = 0;
    return;
  }
  Integer q;
  Integer r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  Integer s1;
  Integer t1;
  ext_gcd(y, r, g, s1, t1);
  s = t1;
  t = s1 - q * t1;
}

Integer mod_abs(const Integer& x, const Integer& m) { return mod_floor(x, abs(m)); }

}  // namespace

std::string Triple::str() const {
  return std::to_string(t1) + "," + std::to_string(t2) + "," + std::to_string(t3);
}

Triple Triple::parse(const std::string& text) {
  std::vector<std::int64_t> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long x = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      v.push_back(x);
    } catch (const std::exception&) {
      throw InputError("malformed triple '" + text + "': expected three comma-separated integers");
    }
  }
  if (v.size() != 3 || (!text.empty() && text.back() == ',')) {
    throw InputError("malformed triple '" + text + "': expected three comma-separated integers");
  }
  return Triple{v[0], v[1], v[2]};
}

std::string ParamPair::str() const { return "((" + a.str() + "),(" + b.str() + "))"; }

std::vector<std::string> pair_violations(const Triple& a, const Triple& b) {
  std::vector<std::string> out;
  triple_violations(a, "a", out);
  triple_violations(b, "b", out);
  return out;
}

ParamPair validate_pair(const Triple& a, const Triple& b) {
  auto v = pair_violations(a, b);
  if (!v.empty()) throw InvalidParameters(std::move(v));
  return ParamPair{a, b, true};
}

Integer h4_order(const ParamPair& pair) {
  require_valid(pair);
  const Triple& a = pair.a;
  const Triple& b = pair.b;
  const Integer det = sq(big(a.t1)) * (sq(big(b.t2)) - sq(big(b.t3))) -
                      sq(big(b.t1)) * (sq(big(a.t2)) - sq(big(a.t3)));
  if (mod_floor(det, 8) != 0) throw InvariantViolation("n determinant not divisible by 8 for " + pair.str());
  return det / 8;
}

Rational m_value(const ParamPair& pair) {
  require_valid(pair);
  const Triple& a = pair.a;
  const Triple& b = pair.b;
  const Integer a1 = sq(big(a.t1));
  const Integer b1 = sq(big(b.t1));
  const Integer det = a1 * (sq(big(b.t2)) + sq(big(b.t3)) + 8) - b1 * (sq(big(a.t2)) + sq(big(a.t3)) + 8);
  return Rational(det, 8 * a1 * b1);
}

BaseIntegrals base_integrals(const ParamPair& pair) {
  require_valid(pair);
  const Triple& a = pair.a;
  const Triple& b = pair.b;
  const Integer a1 = sq(big(a.t1));
  const Integer b1 = sq(big(b.t1));
  BaseIntegrals out;
  out.euler = Rational(-h4_order(pair), a1 * b1);
  out.p1_base = Rational(-(a1 * 8 - b1 * 8), 4 * a1 * b1);
  out.p1_bundle = Rational(-(a1 * (sq(big(b.t2)) + sq(big(b.t3))) - b1 * (sq(big(a.t2)) + sq(big(a.t3)))),
                           4 * a1 * b1);
  return out;
}

int sign_W(const ParamPair& pair) { return require_nonzero_n(pair) > 0 ? -1 : 1; }

Rational p_wedge_q(const ParamPair& pair) {
  require_nonzero_n(pair);
  const BaseIntegrals bi = base_integrals(pair);
  const Rational p = bi.p1_base + bi.p1_bundle;
  return p * p / bi.euler;
}

SParts s_parts(const ParamPair& pair) {
  const Integer n = require_nonzero_n(pair);
  const Triple& a = pair.a;
  const Triple& b = pair.b;
  const Integer ab = sq(big(a.t1)) * sq(big(b.t1));
  const Rational m = m_value(pair);
  SParts out;
  out.principal = -(Rational(abs(n)) - Rational(ab) * m * m) / Rational(224 * n);
  out.defect_minus = defect_D_exact({a.t1, 4, a.t3 + a.t2, a.t3 - a.t2});
  out.defect_plus = defect_D_exact({b.t1, 4, b.t3 + b.t2, b.t3 - b.t2});
  out.s = out.principal - out.defect_minus + out.defect_plus;
  return out;
}

Rational s_invariant(const ParamPair& pair) { return s_parts(pair).s; }

Rational eells_kuiper(const ParamPair& pair) { return s_invariant(pair).frac(); }

BezoutPair bezout_pair(const Triple& a) {
  const Integer x = sq(big(a.t1));
  const Integer diff = sq(big(a.t2)) - sq(big(a.t3));
  if (mod_floor(diff, 8) != 0) throw InputError("(a2^2 - a3^2) is not divisible by 8");
  const Integer y = diff / 8;
  Integer g;
  Integer s;
  Integer t;
  ext_gcd(x, abs(y), g, s, t);
  if (g != 1) {
    throw InputError("no Bezout pair: gcd(a1^2, (a2^2-a3^2)/8) = " + g.get_str() + " for (" + a.str() + ")");
  }
  if (y < 0) t = -t;
  return {s, t};
}

LinkingValue linking_value(const ParamPair& pair) {
  const Integer n = require_nonzero_n(pair);
  LinkingValue out;
  if (abs(n) == 1) {
    out.trivial = true;
    out.scaled = 0;
    out.value = Rational(0);
    return out;
  }
  const BezoutPair e = bezout_pair(pair.a);
  const Triple& b = pair.b;
  const Integer diff = sq(big(b.t2)) - sq(big(b.t3));
  const Integer scaled = e.e1 * sq(big(b.t1)) + e.e0 * (diff / 8);
  out.scaled = mod_abs(scaled, n);
  out.value = Rational(scaled, n).frac();
  return out;
}

bool P1Class::contains(const Integer& x) const {
  const Integer r = mod_floor(x, modulus);
  return r == c || r == neg;
}

P1Class p1_coefficient(const ParamPair& pair) {
  const Integer n = require_nonzero_n(pair);
  if (std::gcd(pair.a.t1, pair.b.t1) != 1) {
    throw Unavailable("unavailable: the p1 formula requires coprime a1, b1");
  }
  const Rational v = Rational(2 * sq(big(pair.a.t1))) * m_value(pair);
  P1Class out;
  out.modulus = abs(n);
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), v.den().get_mpz_t(), out.modulus.get_mpz_t()) == 0) {
    if (out.modulus == 1) {
      inv = 0;
    } else {
      throw Unavailable("unavailable: denominator " + v.den().get_str() + " of 2 a1^2 m is not invertible mod " +
                        out.modulus.get_str());
    }
  }
  out.c = mod_floor(v.num() * inv, out.modulus);
  out.neg = mod_floor(-out.c, out.modulus);
  return out;
}

InvariantReport invariant_report(const ParamPair& pair) {
  require_valid(pair);
  InvariantReport r;
  r.pair = pair;
  r.pair.validated = true;
  r.n = require_nonzero_n(pair);
  r.m = m_value(pair);
  const SParts parts = s_parts(pair);
  r.s = parts.s;
  r.mu = r.s.frac();
  r.defect_minus = parts.defect_minus;
  r.defect_plus = parts.defect_plus;
  r.lk = linking_value(pair);
  try {
    r.p1 = p1_coefficient(pair);
  } catch (const Unavailable& e) {
    r.p1_unavailable_reason = e.what();
  }
  r.sign_W = sign_W(pair);
  const BaseIntegrals bi = base_integrals(pair);
  r.euler_integral = bi.euler;
  r.p1_base_integral = bi.p1_base;
  r.p1_bundle_integral = bi.p1_bundle;
  r.p_wedge_q = p_wedge_q(pair);

  const Integer ab = sq(big(pair.a.t1)) * sq(big(pair.b.t1));
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) throw InvariantViolation("internal identity failed for " + pair.str() + ": " + what);
  };
  check(r.euler_integral == Rational(-r.n, ab), "euler = -n/(a1^2 b1^2)");
  check(r.p1_base_integral + r.p1_bundle_integral == Rational(-2) * r.m, "p1_base + p1_bundle = -2m");
  check(r.mu >= Rational(0) && r.mu < Rational(1), "0 <= mu < 1");
  check(r.sign_W == (r.euler_integral.sign() > 0 ? 1 : -1), "sign(W) = sign(euler)");
  check(r.p_wedge_q == Rational(-4) * r.m * r.m * Rational(ab) / Rational(r.n), "p^q = -4 m^2 a1^2 b1^2 / n");
  return r;
}

}  // namespace seveninv
