#include "seveninv/report_io.hpp"

#include <sstream>

namespace seveninv {

using json = nlohmann::ordered_json;

namespace {

std::string lk_text(const LinkingValue& lk) { return lk.trivial ? "trivial" : lk.value.str(); }

}  // namespace

json rational_json(const Rational& r) { return json{{"num", r.num().get_str()}, {"den", r.den().get_str()}}; }

json integer_json(const Integer& v) {
  if (fits_int64(v)) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

json triple_json(const Triple& t) { return json::array({t.t1, t.t2, t.t3}); }

json report_json(const InvariantReport& r) {
  json j;
  j["a"] = triple_json(r.pair.a);
  j["b"] = triple_json(r.pair.b);
  j["n"] = integer_json(r.n);
  j["m"] = rational_json(r.m);
  j["s"] = rational_json(r.s);
  j["mu"] = rational_json(r.mu);
  j["lk"] = r.lk.trivial ? json("trivial") : rational_json(r.lk.value);
  if (r.p1) {
    j["p1"] = json::array({integer_json(r.p1->lo()), integer_json(r.p1->hi())});
  } else {
    j["p1"] = nullptr;
    j["p1_unavailable"] = r.p1_unavailable_reason;
  }
  j["defect_minus"] = rational_json(r.defect_minus);
  j["defect_plus"] = rational_json(r.defect_plus);
  j["sign_W"] = r.sign_W;
  return j;
}

json census_json(const CensusReport& r) {
  json j;
  j["base"] = {{"a", triple_json(r.base.a)}, {"b", triple_json(r.base.b)}};
  j["stride"] = integer_json(r.stride);
  json members = json::array();
  json s_values = json::array();
  for (std::size_t t = 0; t < r.members.size(); ++t) {
    const InvariantReport& m = r.members[t];
    members.push_back({{"index", integer_json(r.indices[t])},
                       {"a", triple_json(m.pair.a)},
                       {"b", triple_json(m.pair.b)},
                       {"s", m.s.str()},
                       {"mu", m.mu.str()},
                       {"verdict", r.verdicts[t].str()}});
    s_values.push_back(m.s.str());
  }
  j["members"] = members;
  j["s_values"] = s_values;
  json distinct = json::array();
  for (const Rational& s : r.distinct_abs_s) distinct.push_back(s.str());
  j["distinct_abs_s"] = distinct;
  j["all_pairwise_diffeomorphic"] = r.all_pairwise_diffeomorphic;
  j["mu_constant"] = r.mu_constant;
  j["failures"] = r.failures;
  return j;
}

json oracle_json(const OracleReport& r) {
  json j;
  j["a"] = triple_json(r.pair.a);
  j["b"] = triple_json(r.pair.b);
  j["lambda_s"] = rational_json(r.lambda_s);
  j["oracle"] = rational_json(r.oracle);
  j["closed_form"] = rational_json(r.closed_form);
  j["defect_minus"] = rational_json(r.defect_minus);
  j["defect_plus"] = rational_json(r.defect_plus);
  j["equal"] = r.equal;
  json strata_j = json::array();
  for (std::size_t i = 0; i < r.strata.size(); ++i) {
    const StratumData& st = r.strata[i];
    json chern = json::array();
    for (const Rational& c : st.chern) chern.push_back(rational_json(c));
    json entry{{"side", st.side == Side::Minus ? "minus" : "plus"},
               {"q", st.q},
               {"k", st.k},
               {"weights", st.weights},
               {"theta_num", st.theta_num},
               {"chern", chern},
               {"sigma", st.sigma},
               {"epsilon", st.epsilon}};
    if (i < r.stratum_values.size()) {
      entry["value_float"] = json::array({r.stratum_values[i].real(), r.stratum_values[i].imag()});
    }
    strata_j.push_back(entry);
  }
  j["strata"] = strata_j;
  return j;
}

const std::string& csv_header() {
  static const std::string h = "a1,a2,a3,b1,b2,b3,n,m,s,mu,lk,p1_lo,p1_hi,defect_minus,defect_plus";
  return h;
}

std::string csv_row(const InvariantReport& r) {
  std::ostringstream os;
  const Triple& a = r.pair.a;
  const Triple& b = r.pair.b;
  os << a.t1 << ',' << a.t2 << ',' << a.t3 << ',' << b.t1 << ',' << b.t2 << ',' << b.t3 << ',' << r.n << ','
     << r.m << ',' << r.s << ',' << r.mu << ',' << lk_text(r.lk) << ',';
  if (r.p1) os << r.p1->lo() << ',' << r.p1->hi();
  else os << ',';
  os << ',' << r.defect_minus << ',' << r.defect_plus;
  return os.str();
}

std::string report_table(const InvariantReport& r) {
  std::ostringstream os;
  os << "pair          " << r.pair.str() << '\n'
     << "n             " << r.n << '\n'
     << "m             " << r.m << '\n'
     << "s             " << r.s << '\n'
     << "mu            " << r.mu << '\n'
     << "lk            " << lk_text(r.lk) << '\n'
     << "p1            ";
  if (r.p1) os << "+-" << r.p1->c << " mod " << r.p1->modulus << '\n';
  else os << "unavailable (" << r.p1_unavailable_reason << ")\n";
  os << "defect_minus  " << r.defect_minus << '\n'
     << "defect_plus   " << r.defect_plus << '\n'
     << "sign_W        " << r.sign_W << '\n';
  return os.str();
}

std::string census_table(const CensusReport& r) {
  std::ostringstream os;
  os << "base " << r.base.str() << "  stride " << r.stride << '\n';
  for (std::size_t t = 0; t < r.members.size(); ++t) {
    os << "i=" << r.indices[t] << "  " << r.members[t].pair.str() << "  s=" << r.members[t].s
       << "  mu=" << r.members[t].mu << "  " << r.verdicts[t].str() << '\n';
  }
  os << "distinct |s|: " << r.distinct_abs_s.size() << "  pairwise diffeomorphic: "
     << (r.all_pairwise_diffeomorphic ? "yes" : "no") << '\n';
  for (const auto& f : r.failures) os << "failure: " << f << '\n';
  return os.str();
}

}  // namespace seveninv
