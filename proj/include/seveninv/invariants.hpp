#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seveninv/rational.hpp"

namespace seveninv {

struct Triple {
  std::int64_t t1 = 1;
  std::int64_t t2 = 1;
  std::int64_t t3 = 1;

  friend auto operator<=>(const Triple&, const Triple&) = default;
  std::string str() const;
  /// Parses "t1,t2,t3". Throws InputError on malformed text.
  static Triple parse(const std::string& text);
};

struct ParamPair {
  Triple a;
  Triple b;
  bool validated = false;

  friend bool operator==(const ParamPair& x, const ParamPair& y) { return x.a == y.a && x.b == y.b; }
  std::string str() const;
};

/// Every violated validity condition, in a fixed order. Empty means valid.
std::vector<std::string> pair_violations(const Triple& a, const Triple& b);

/// Returns the validated pair or throws InvalidParameters listing every
/// violation. n = 0 is accepted here; invariant operations reject it.
ParamPair validate_pair(const Triple& a, const Triple& b);

/// Signed n = det[[a1^2, b1^2], [a2^2 - a3^2, b2^2 - b3^2]] / 8. |n| is the
/// order of H^4; n = 0 means H^4 is infinite.
Integer h4_order(const ParamPair& pair);

/// m = det[[a1^2, b1^2], [a2^2 + a3^2 + 8, b2^2 + b3^2 + 8]] / (8 a1^2 b1^2).
Rational m_value(const ParamPair& pair);

struct BaseIntegrals {
  Rational euler;      // -n / (a1^2 b1^2)
  Rational p1_base;    // p1 of the base
  Rational p1_bundle;  // p1 of the bundle; p1_base + p1_bundle = -2m
};
BaseIntegrals base_integrals(const ParamPair& pair);

/// -sign(n). Throws DegenerateEuler for n = 0.
int sign_W(const ParamPair& pair);

/// (p1_base + p1_bundle)^2 / euler = -4 m^2 a1^2 b1^2 / n.
Rational p_wedge_q(const ParamPair& pair);

struct SParts {
  Rational principal;     // -(|n| - a1^2 b1^2 m^2) / (224 n)
  Rational defect_minus;  // D(a1; 4, a3 + a2, a3 - a2)
  Rational defect_plus;   // D(b1; 4, b3 + b2, b3 - b2)
  Rational s;             // principal - defect_minus + defect_plus
};
SParts s_parts(const ParamPair& pair);
Rational s_invariant(const ParamPair& pair);

/// mu = s mod 1, in [0, 1).
Rational eells_kuiper(const ParamPair& pair);

/// Integer solution of e1 a1^2 + e0 (a2^2 - a3^2)/8 = 1.
struct BezoutPair {
  Integer e1;
  Integer e0;
};
BezoutPair bezout_pair(const Triple& a);

struct LinkingValue {
  bool trivial = false;  // |n| = 1
  Integer scaled;        // L with lk(1, 1) = L / n, reduced mod |n|
  Rational value;        // L / n mod 1
};
LinkingValue linking_value(const ParamPair& pair);

/// p1 = +-c times the generator of H^4 = Z/|n|.
struct P1Class {
  Integer modulus;  // |n|
  Integer c;        // 2 a1^2 m mod |n|
  Integer neg;      // -c mod |n|
  Integer lo() const { return c < neg ? c : neg; }
  Integer hi() const { return c < neg ? neg : c; }
  bool contains(const Integer& x) const;
};
/// Throws Unavailable when gcd(a1, b1) != 1 or the denominator of 2 a1^2 m
/// is not invertible mod |n|.
P1Class p1_coefficient(const ParamPair& pair);

struct InvariantReport {
  ParamPair pair;
  Integer n;
  Rational m;
  Rational s;
  Rational mu;
  LinkingValue lk;
  std::optional<P1Class> p1;  // empty when unavailable
  std::string p1_unavailable_reason;
  Rational defect_minus;
  Rational defect_plus;
  int sign_W = 0;
  Rational euler_integral;
  Rational p1_base_integral;
  Rational p1_bundle_integral;
  Rational p_wedge_q;
};

/// Everything above for one pair, with internal identities checked
/// (InvariantViolation on failure).
InvariantReport invariant_report(const ParamPair& pair);

}  // namespace seveninv
