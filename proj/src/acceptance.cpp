#include "seveninv/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "seveninv/cyclotomic.hpp"
#include "seveninv/defect.hpp"
#include "seveninv/errors.hpp"
#include "seveninv/family.hpp"
#include "seveninv/inertia.hpp"
#include "seveninv/invariants.hpp"
#include "seveninv/sampling.hpp"
#include "seveninv/search.hpp"

namespace seveninv::acceptance {

namespace {

// Counts passing and failing checks and keeps the first few failure notes.
class Tally {
 public:
  void check(bool ok, const std::string& label, const std::function<std::string()>& note = {}) {
    auto& [pass, fail] = counts_[label];
    if (ok) {
      ++pass;
      return;
    }
    ++fail;
    if (notes_.size() < 3 && note) notes_.push_back(label + ": " + note());
  }
  bool ok() const {
    return std::all_of(counts_.begin(), counts_.end(), [](const auto& kv) { return kv.second.second == 0; });
  }
  std::string summary() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [label, c] : counts_) {
      os << (first ? "" : ", ") << label << ' ' << c.first << '/' << (c.first + c.second);
      first = false;
    }
    for (const auto& n : notes_) os << "; e.g. " << n;
    return os.str();
  }

 private:
  std::map<std::string, std::pair<long, long>> counts_;
  std::vector<std::string> notes_;
};

ParamPair milnor_k(std::int64_t k) { return validate_pair({-3, -3, 1}, {1, 4 * k + 1, 4 * k + 1}); }

Tally golden_values() {
  Tally t;
  for (std::int64_t k = -5; k <= 16; ++k) {
    const Rational s = s_invariant(milnor_k(k));
    const Integer poly = 4 * Integer(k) * k * k * k + 4 * Integer(k) * k * k + 3 * Integer(k) * k + k;
    const Rational expected = -Rational(9, 56) * Rational(poly);
    t.check(s == expected, "s(M_k) exact", [&] { return "k=" + std::to_string(k) + " got " + s.str(); });
  }
  return t;
}

Tally non_milnor_coverage() {
  Tally t;
  std::set<long> residues;
  for (std::int64_t k : {-3, -1, 1, 2, 4, 8, 11, 15}) {
    const Rational scaled = eells_kuiper(milnor_k(k)) * Rational(28);
    t.check(scaled.is_integer(), "28 mu integral", [&] { return scaled.str(); });
    if (scaled.is_integer()) residues.insert(mod_floor(scaled.num(), 28).get_si());
  }
  const std::set<long> expected{2, 5, 9, 12, 16, 19, 23, 26};
  t.check(residues == expected, "residue set {+-2,+-5,+-9,+-12}", [&] {
    std::string s;
    for (long r : residues) s += std::to_string(r) + " ";
    return "got " + s;
  });
  return t;
}

Tally oracle_equivalence() {
  Tally t;
  auto one = [&](const ParamPair& p) {
    const OracleReport r = oracle_check(p);
    t.check(r.equal, "oracle = closed form",
            [&] { return p.str() + " " + r.oracle.str() + " vs " + r.closed_form.str(); });
  };
  one(validate_pair({-3, -3, 1}, {1, 1, 1}));
  std::mt19937_64 rng(20240601);
  for (int c = 0; c < 50; ++c) one(sample_pair(rng, 3, 25, 60));
  return t;
}

Tally defect_suite() {
  Tally t;
  std::mt19937_64 rng(4099);
  for (int c = 0; c < 200; ++c) {
    const DefectArgs a = sample_defect_args(rng, 99);
    const Rational base = defect_D_exact(a);
    const auto where = [&] {
      std::ostringstream os;
      os << "(" << a.q << "; " << a.p1 << ", " << a.p2 << ", " << a.p3 << ")";
      return os.str();
    };
    std::array<std::int64_t, 3> p{a.p1, a.p2, a.p3};
    std::sort(p.begin(), p.end());
    bool perm_ok = true;
    do {
      perm_ok = perm_ok && defect_D_exact({a.q, p[0], p[1], p[2]}) == base;
    } while (std::next_permutation(p.begin(), p.end()));
    t.check(perm_ok, "permutation", where);
    t.check(defect_D_exact({-a.q, a.p1, a.p2, a.p3}) == base, "q-sign", where);
    const bool odd = defect_D_exact({a.q, -a.p1, a.p2, a.p3}) == -base &&
                     defect_D_exact({a.q, a.p1, -a.p2, a.p3}) == -base &&
                     defect_D_exact({a.q, a.p1, a.p2, -a.p3}) == -base;
    t.check(odd, "oddness", where);
    const Rational shifted = defect_D_exact({a.q, a.p1, a.p2, a.p3 + 2 * a.q});
    t.check(shifted == base, "2q-periodicity",
            [&] { return where() + " D=" + base.str() + " shifted " + shifted.str(); });
  }
  t.check(defect_D_exact({3, 4, -2, 4}) == Rational(-1, 28), "D(3;4,-2,4) = -1/28");
  t.check(defect_D_exact({1, 4, -2, 4}).is_zero() && defect_D_exact({-1, 6, 2, 10}).is_zero(), "D(1;.) = 0");
  return t;
}

Tally family_suite() {
  Tally t;
  std::mt19937_64 rng(777);
  for (int c = 0; c < 25; ++c) {
    const ParamPair base = sample_pair(rng, 1, 25, 60);
    const InvariantReport r0 = invariant_report(base);
    const FamilyCoefficients f = family_coefficients(base);
    const Integer ab = Integer(base.a.t1 * base.a.t1) * (base.b.t1 * base.b.t1);
    for (std::int64_t i = -3; i <= 3; ++i) {
      const ParamPair member = family_member(base, i);
      const InvariantReport ri = invariant_report(member);
      const auto where = [&] { return base.str() + " i=" + std::to_string(i); };
      t.check(ri.n == r0.n, "n-invariance", where);
      t.check(ri.lk.trivial == r0.lk.trivial && ri.lk.value == r0.lk.value, "lk-invariance", where);
      t.check(ri.defect_minus == r0.defect_minus && ri.defect_plus == r0.defect_plus, "defect stability", [&] {
        return where() + " D- " + r0.defect_minus.str() + " -> " + ri.defect_minus.str() + ", D+ " +
               r0.defect_plus.str() + " -> " + ri.defect_plus.str();
      });
      const Integer x = f.A + f.B * i + f.C * i * i;
      const Rational predicted = Rational(x * x - f.A * f.A, 224 * r0.n * ab);
      t.check(ri.s - r0.s == predicted, "s-polynomial", [&] {
        return where() + " s(i)-s(0)=" + (ri.s - r0.s).str() + " vs " + predicted.str();
      });
      const FamilyCoefficients fi = family_coefficients(member);
      t.check(fi.B != 0 || fi.C != 0, "(B,C) != (0,0)", where);
    }
  }
  return t;
}

Tally census() {
  Tally t;
  const CensusReport r = moduli_census(validate_pair({-3, -3, 1}, {1, 1, 1}), 5);
  t.check(r.stride == 224 * 9, "stride 2^5*7*|n|*a1^2*b1^2", [&] { return r.stride.get_str(); });
  t.check(r.members.size() == 5, "5 members");
  t.check(r.all_pairwise_diffeomorphic, "pairwise Diffeomorphic",
          [&] { return r.failures.empty() ? std::string() : r.failures.front(); });
  t.check(r.distinct_abs_s.size() == 5, "5 distinct |s|", [&] { return std::to_string(r.distinct_abs_s.size()); });
  return t;
}

Tally quantization(unsigned threads) {
  Tally t;
  SearchConfig config;
  config.max = 9;
  config.homotopy_sphere = true;
  config.threads = threads;
  stream_search(config, [&](const InvariantReport& r) {
    const Rational scaled = r.s * Rational(28);
    t.check(scaled.is_integer(), "28 s integral", [&] { return r.pair.str() + " s=" + r.s.str(); });
    if (r.pair.a.t1 == 1 && r.pair.b.t1 == 1 && scaled.is_integer()) {
      t.check(classify_mu(r.mu) == SphereClass::Milnor, "a1=b1=1 mu in Milnor set",
              [&] { return r.pair.str() + " mu=" + r.mu.str(); });
    }
    return true;
  });
  return t;
}

Tally arithmetic() {
  Tally t;
  std::mt19937_64 rng(1202);
  auto uniform = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
  auto element = [&](int n) {
    std::vector<Rational> c(static_cast<std::size_t>(euler_phi(n)));
    for (auto& x : c) x = Rational(Integer(uniform(-20, 20)), Integer(uniform(1, 20)));
    return CyclotomicElement::from_coefficients(n, c);
  };
  for (int c = 0; c < 500; ++c) {
    const int n = static_cast<int>(uniform(1, 120));
    const auto x = element(n);
    const auto y = element(n);
    const auto z = element(n);
    const CyclotomicElement one(n, Rational(1));
    bool ok = (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z && x * y == y * x &&
              (x + y) - y == x && x + CyclotomicElement(n) == x;
    if (!x.is_zero()) ok = ok && x * x.inverse() == one;
    t.check(ok, "field axioms", [&] { return "conductor " + std::to_string(n); });

    const std::int64_t r = uniform(1, 30);
    const int m = static_cast<int>(4 * r);
    std::int64_t b = 0;
    do {
      b = uniform(1, 2 * r);
    } while ((2 * r) % b != 0);
    const std::int64_t a = uniform(-300, 300);
    const auto cs = cos_pi(a, b, m);
    const auto sn = sin_pi(a, b, m);
    const double angle = std::numbers::pi * static_cast<double>(a) / static_cast<double>(b);
    const bool embedded = std::abs(cs.embed().real() - std::cos(angle)) < 1e-9 &&
                          std::abs(sn.embed().real() - std::sin(angle)) < 1e-9;
    t.check(cs * cs + sn * sn == CyclotomicElement(m, Rational(1)) && embedded, "cos^2+sin^2 = 1",
            [&] { return std::to_string(a) + "/" + std::to_string(b) + " in conductor " + std::to_string(m); });
  }
  for (int c = 0; c < 200; ++c) {
    const DefectArgs a = sample_defect_args(rng, 99);
    const double exact = defect_D_exact(a).to_double();
    const double fast = defect_D_float(a);
    const double unit = 1.0 / (224.0 * static_cast<double>(a.q) * static_cast<double>(a.q));
    t.check(std::abs(fast - exact) <= 1e-9 * std::max(std::abs(exact), unit), "float D within 1e-9",
            [&] { return std::to_string(fast) + " vs " + std::to_string(exact); });
  }
  return t;
}

struct CriterionInfo {
  const char* title;
  double limit;
};

constexpr std::array<CriterionInfo, kCriteria> kCriteriaInfo{{
    {"Mk golden s values", 1},
    {"non-Milnor mu coverage", 1},
    {"inertia oracle equivalence", 60},
    {"D-sum property suite", 60},
    {"family suite", 30},
    {"moduli census", 10},
    {"homotopy-sphere quantization", 120},
    {"arithmetic soundness", 60},
}};

std::string format_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << 's';
  return os.str();
}

}  // namespace

std::string Result::line() const {
  std::ostringstream os;
  os << (pass() ? "PASS" : "FAIL") << " C" << id << ' ' << title << " (" << format_seconds(seconds) << ", limit "
     << limit << "s";
  if (seconds >= limit) os << ", TIME EXCEEDED";
  os << "): " << detail;
  return os.str();
}

Result run(int id, unsigned threads) {
  if (id < 1 || id > kCriteria) throw InputError("criterion must be in 1.." + std::to_string(kCriteria));
  Result r;
  r.id = id;
  r.title = kCriteriaInfo[static_cast<std::size_t>(id - 1)].title;
  r.limit = kCriteriaInfo[static_cast<std::size_t>(id - 1)].limit;
  const auto start = std::chrono::steady_clock::now();
  try {
    Tally t;
    switch (id) {
      case 1: t = golden_values(); break;
      case 2: t = non_milnor_coverage(); break;
      case 3: t = oracle_equivalence(); break;
      case 4: t = defect_suite(); break;
      case 5: t = family_suite(); break;
      case 6: t = census(); break;
      case 7: t = quantization(threads); break;
      default: t = arithmetic(); break;
    }
    r.checks_ok = t.ok();
    r.detail = t.summary();
  } catch (const std::exception& e) {
    r.checks_ok = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

int run_battery(std::ostream& out, std::optional<int> only, unsigned threads) {
  bool all = true;
  for (int id = 1; id <= kCriteria; ++id) {
    if (only && *only != id) continue;
    const Result r = run(id, threads);
    out << r.line() << std::endl;
    all = all && r.pass();
  }
  return all ? 0 : 1;
}

}  // namespace seveninv::acceptance
