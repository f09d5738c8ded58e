#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "seveninv/invariants.hpp"

namespace seveninv {

/// a_i = (a1, a2 + a1^2 (b3 - b2) i, a3 + a1^2 (b3 - b2) i),
/// b_i = (b1, b2 + b1^2 (a3 - a2) i, b3 + b1^2 (a3 - a2) i).
/// Throws InputError on 64-bit overflow and InvariantViolation if the member
/// fails validation.
ParamPair family_member(const ParamPair& base, std::int64_t i);

/// e_{1,i} = e1 - (i/4) e0 (b3 - b2)(a2 - a3): together with the unchanged e0
/// it is a Bezout pair for a_i.
Integer shifted_e1(const ParamPair& base, const BezoutPair& e, std::int64_t i);

/// a1^2 b1^2 m(a_i, b_i) = A + B i + C i^2.
struct FamilyCoefficients {
  Integer A;
  Integer B;
  Integer C;
};
FamilyCoefficients family_coefficients(const ParamPair& pair);

/// 224 |n| a1^2 b1^2.
Integer census_stride(const ParamPair& pair);

struct Verdict {
  enum class Kind { Diffeomorphic, NotDiffeomorphic, Undecidable };
  Kind kind = Kind::Undecidable;
  Integer witness;  // u with psi(1_p) = u 1_q
  int sign = 1;     // u c_p = sign * c_q mod |n|
  std::string reason;

  std::string str() const;
};

Verdict diffeo_decide(const InvariantReport& p, const InvariantReport& q);
Verdict diffeo_decide(const ParamPair& p, const ParamPair& q);

struct CensusReport {
  ParamPair base;
  Integer stride;
  std::vector<Integer> indices;
  std::vector<InvariantReport> members;
  std::vector<Verdict> verdicts;  // member t against the base
  std::set<Rational> distinct_abs_s;
  bool all_pairwise_diffeomorphic = false;
  bool mu_constant = false;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Members at indices stride * t, t = 0 .. count - 1. Requires n != 0, odd |n|
/// and gcd(a1, b1) = 1 (InputError otherwise).
CensusReport moduli_census(const ParamPair& pair, int count, std::optional<Integer> stride = std::nullopt);

enum class SphereClass { Milnor, NonMilnor, NotHomotopySphere };
std::string to_string(SphereClass c);
SphereClass milnor_membership(const ParamPair& pair);
/// Classification of 28 mu mod 28, for |n| = 1.
SphereClass classify_mu(const Rational& mu);

}  // namespace seveninv
