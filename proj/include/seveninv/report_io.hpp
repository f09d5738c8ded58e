#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "seveninv/family.hpp"
#include "seveninv/inertia.hpp"
#include "seveninv/invariants.hpp"

namespace seveninv {

/// {"num": "...", "den": "..."} with decimal strings.
nlohmann::ordered_json rational_json(const Rational& r);
/// A JSON number when the value fits in 64 bits, a decimal string otherwise.
nlohmann::ordered_json integer_json(const Integer& v);
nlohmann::ordered_json triple_json(const Triple& t);

/// Flat object: a, b, n, m, s, mu, lk ("trivial" or a rational), p1 (two
/// residues or null), defect_minus, defect_plus, sign_W.
nlohmann::ordered_json report_json(const InvariantReport& r);
nlohmann::ordered_json census_json(const CensusReport& r);
nlohmann::ordered_json oracle_json(const OracleReport& r);

/// Fixed CSV layout; rationals as "p/q", lk as "trivial" when |n| = 1, empty
/// p1 cells when the coefficient is unavailable.
const std::string& csv_header();
std::string csv_row(const InvariantReport& r);

/// Aligned "key: value" lines for terminals.
std::string report_table(const InvariantReport& r);
std::string census_table(const CensusReport& r);

}  // namespace seveninv
