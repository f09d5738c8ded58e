#include "seveninv/family.hpp"

#include <numeric>

#include "seveninv/errors.hpp"

namespace seveninv {

namespace {

Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }

std::int64_t narrow(const Integer& v, const char* what) {
  if (!fits_int64(v)) throw InputError(std::string("family member entry overflows 64 bits: ") + what);
  return v.get_si();
}

Verdict make(Verdict::Kind kind, std::string reason) {
  Verdict v;
  v.kind = kind;
  v.reason = std::move(reason);
  return v;
}

}  // namespace

ParamPair family_member(const ParamPair& base, std::int64_t i) {
  const ParamPair p = validate_pair(base.a, base.b);
  const Integer sa = big(p.a.t1) * big(p.a.t1) * (big(p.b.t3) - big(p.b.t2)) * big(i);
  const Integer sb = big(p.b.t1) * big(p.b.t1) * (big(p.a.t3) - big(p.a.t2)) * big(i);
  const Triple a{p.a.t1, narrow(big(p.a.t2) + sa, "a2"), narrow(big(p.a.t3) + sa, "a3")};
  const Triple b{p.b.t1, narrow(big(p.b.t2) + sb, "b2"), narrow(big(p.b.t3) + sb, "b3")};
  auto v = pair_violations(a, b);
  if (!v.empty()) {
    std::string msg = "family member " + std::to_string(i) + " of " + p.str() + " is invalid:";
    for (const auto& s : v) msg += " " + s + ";";
    throw InvariantViolation(msg);
  }
  return ParamPair{a, b, true};
}

Integer shifted_e1(const ParamPair& base, const BezoutPair& e, std::int64_t i) {
  const Integer num = big(i) * e.e0 * (big(base.b.t3) - big(base.b.t2)) * (big(base.a.t2) - big(base.a.t3));
  if (mod_floor(num, 4) != 0) throw InvariantViolation("e_{1,i} shift is not integral");
  return e.e1 - num / 4;
}

FamilyCoefficients family_coefficients(const ParamPair& pair) {
  const ParamPair p = validate_pair(pair.a, pair.b);
  const Integer a1 = big(p.a.t1) * big(p.a.t1);
  const Integer b1 = big(p.b.t1) * big(p.b.t1);
  const Integer da = big(p.a.t3) - big(p.a.t2);
  const Integer db = big(p.b.t3) - big(p.b.t2);
  const Integer sa = big(p.a.t2) + big(p.a.t3);
  const Integer sb = big(p.b.t2) + big(p.b.t3);
  const Rational A = Rational(a1 * b1) * m_value(p);
  const Integer B4 = a1 * b1 * sb * da - b1 * a1 * sa * db;
  const Integer C4 = a1 * b1 * b1 * da * da - b1 * a1 * a1 * db * db;
  if (!A.is_integer() || mod_floor(B4, 4) != 0 || mod_floor(C4, 4) != 0) {
    throw InvariantViolation("family coefficients are not integers for " + p.str());
  }
  FamilyCoefficients f{A.num(), B4 / 4, C4 / 4};
  for (std::int64_t i : {-2, -1, 1, 2, 3}) {
    const Integer lhs = (Rational(a1 * b1) * m_value(family_member(p, i))).num();
    if (lhs != f.A + f.B * big(i) + f.C * big(i) * big(i)) {
      throw InvariantViolation("a1^2 b1^2 m(a_i, b_i) != A + B i + C i^2 at i = " + std::to_string(i));
    }
  }
  return f;
}

Integer census_stride(const ParamPair& pair) {
  const Integer n = h4_order(pair);
  return 224 * abs(n) * big(pair.a.t1) * big(pair.a.t1) * big(pair.b.t1) * big(pair.b.t1);
}

std::string Verdict::str() const {
  switch (kind) {
    case Kind::Diffeomorphic:
      return "Diffeomorphic(u=" + witness.get_str() + ", sign=" + (sign > 0 ? "+1" : "-1") + ")";
    case Kind::NotDiffeomorphic:
      return "NotDiffeomorphic(" + reason + ")";
    case Kind::Undecidable:
      return "Undecidable(" + reason + ")";
  }
  return "?";
}

Verdict diffeo_decide(const InvariantReport& p, const InvariantReport& q) {
  const Integer order = abs(p.n);
  if (order != abs(q.n)) return make(Verdict::Kind::NotDiffeomorphic, "H^4 order differs");
  if (p.mu != q.mu) return make(Verdict::Kind::NotDiffeomorphic, "Eells-Kuiper invariant differs");
  if (mod_floor(order, 2) == 0) {
    return make(Verdict::Kind::Undecidable, "even-order H^4: q-invariant not computed");
  }
  if (!p.p1 || !q.p1) {
    return make(Verdict::Kind::Undecidable,
                "p1 coefficient unavailable: " + (p.p1 ? q.p1_unavailable_reason : p.p1_unavailable_reason));
  }
  if (order == 1) {
    Verdict v = make(Verdict::Kind::Diffeomorphic, "");
    v.witness = 1;
    return v;
  }
  // psi(1_p) = u 1_q preserves lk iff L_p / n_p = u^2 L_q / n_q mod 1, and
  // carries p1 iff u c_p = +-c_q mod |n|.
  const Rational lp = p.lk.value;
  const Rational lq = q.lk.value;
  for (Integer u = 1; u < order; ++u) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), order.get_mpz_t());
    if (g != 1) continue;
    if ((Rational(u * u) * lq - lp).frac() != Rational(0)) continue;
    const Integer image = mod_floor(u * p.p1->c, order);
    int sign = 0;
    if (image == q.p1->c) {
      sign = 1;
    } else if (image == q.p1->neg) {
      sign = -1;
    }
    if (sign == 0) continue;
    Verdict v = make(Verdict::Kind::Diffeomorphic, "");
    v.witness = u;
    v.sign = sign;
    return v;
  }
  return make(Verdict::Kind::NotDiffeomorphic, "no isomorphism of H^4 preserves lk and p1");
}

Verdict diffeo_decide(const ParamPair& p, const ParamPair& q) {
  return diffeo_decide(invariant_report(p), invariant_report(q));
}

CensusReport moduli_census(const ParamPair& pair, int count, std::optional<Integer> stride) {
  if (count < 1) throw InputError("census count must be >= 1");
  CensusReport r;
  r.base = validate_pair(pair.a, pair.b);
  const Integer n = h4_order(r.base);
  if (n == 0) throw DegenerateEuler();
  if (mod_floor(n, 2) == 0) throw InputError("census requires odd |n|, got n = " + n.get_str());
  if (std::gcd(pair.a.t1, pair.b.t1) != 1) throw InputError("census requires gcd(a1, b1) = 1");
  r.stride = stride ? *stride : census_stride(r.base);
  if (r.stride <= 0) throw InputError("stride must be positive");

  for (int t = 0; t < count; ++t) {
    const Integer index = r.stride * t;
    if (!fits_int64(index)) throw InputError("census index overflows 64 bits");
    r.indices.push_back(index);
    r.members.push_back(invariant_report(family_member(r.base, index.get_si())));
  }
  r.mu_constant = true;
  for (std::size_t t = 0; t < r.members.size(); ++t) {
    r.verdicts.push_back(diffeo_decide(r.members[0], r.members[t]));
    r.distinct_abs_s.insert(r.members[t].s.abs());
    if (r.members[t].mu != r.members[0].mu) {
      r.mu_constant = false;
      r.failures.push_back("mu at index " + r.indices[t].get_str() + " differs from the base");
    }
  }
  r.all_pairwise_diffeomorphic = true;
  for (std::size_t x = 0; x < r.members.size(); ++x) {
    for (std::size_t y = x + 1; y < r.members.size(); ++y) {
      const Verdict v = diffeo_decide(r.members[x], r.members[y]);
      if (v.kind != Verdict::Kind::Diffeomorphic) {
        r.all_pairwise_diffeomorphic = false;
        r.failures.push_back("indices " + r.indices[x].get_str() + " and " + r.indices[y].get_str() + ": " +
                             v.str());
      }
    }
  }
  return r;
}

std::string to_string(SphereClass c) {
  switch (c) {
    case SphereClass::Milnor:
      return "milnor";
    case SphereClass::NonMilnor:
      return "non_milnor";
    case SphereClass::NotHomotopySphere:
      return "not_homotopy_sphere";
  }
  return "?";
}

SphereClass classify_mu(const Rational& mu) {
  const Rational scaled = mu.frac() * Rational(28);
  if (!scaled.is_integer()) throw InvariantViolation("28 mu is not an integer for a homotopy sphere: mu = " + mu.str());
  const long r = scaled.num().get_si();
  const long sym = std::min(r, 28 - r);
  for (long x : {2L, 5L, 9L, 12L})
    if (sym == x) return SphereClass::NonMilnor;
  return SphereClass::Milnor;
}

SphereClass milnor_membership(const ParamPair& pair) {
  const Integer n = h4_order(pair);
  if (abs(n) != 1) return SphereClass::NotHomotopySphere;
  return classify_mu(eells_kuiper(pair));
}

}  // namespace seveninv
