#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "seveninv/cyclotomic.hpp"
#include "seveninv/invariants.hpp"
#include "seveninv/rational.hpp"

namespace seveninv {

enum class Side { Minus, Plus };

/// One singular stratum: the element of order dividing |q| indexed by k,
/// acting on the three line-bundle summands with rotation angles
/// theta_j = pi * theta_num[j] / |q|.
struct StratumData {
  Side side = Side::Minus;
  std::int64_t q = 1;  // signed t1 of the side's triple
  std::int64_t k = 1;  // 1 <= k <= (|q|-1)/2
  std::array<std::int64_t, 3> weights{};    // (4, t2 - t3, t2 + t3)
  std::array<std::int64_t, 3> theta_num{};  // 2 w_j k, not reduced
  std::array<Rational, 3> chern;            // -w_j / |q|
  int sigma = 1;
  int epsilon = 1;
};

/// The x/2 versus x argument of csch in the A-hat integrand.
enum class CschArgument { Half, Full };

std::vector<StratumData> strata(const ParamPair& pair);

/// Recomputed sign: prod_j cos(r theta_j / 2), r the order of the stratum's
/// group element. Equals +1 for every stratum produced by strata().
int stratum_epsilon(const StratumData& st);

/// Degree-2 coefficient of sum_j x_j-linear terms of
/// epsilon * prod_j (1/2) csch(x_j/2 + i theta_j/2) + prod_j coth(x_j + i theta_j/2) / 224
/// (with x_j in place of x_j/2 for CschArgument::Full), each x_j replaced by
/// its Chern number. Lives in Q(zeta_{4|q|}); real but in general not
/// rational, since single strata are Galois conjugates of one another.
/// Throws DegenerateDefect at a pole and InvariantViolation if the result is
/// not real.
CyclotomicElement stratum_integral(const StratumData& st, CschArgument convention);
CyclotomicElement stratum_integral(const StratumData& st);  // calibrated convention

/// -(1/|a1|) sum_minus + (1/|b1|) sum_plus of stratum_integral.
Rational lambda_s_integral(const ParamPair& pair, CschArgument convention);
Rational lambda_s_integral(const ParamPair& pair);

/// The csch convention that reproduces the closed form on
/// ((-3,-3,1),(1,1,1)); computed once, then frozen.
CschArgument calibrated_convention();

struct OracleReport {
  ParamPair pair;
  Rational lambda_s;      // lambda_s_integral
  Rational defect_minus;  // D(a1; 4, a3 + a2, a3 - a2)
  Rational defect_plus;   // D(b1; 4, b3 + b2, b3 - b2)
  Rational oracle;        // -lambda_s
  Rational closed_form;   // D(a1; 4, a2 - a3, a2 + a3) - D(b1; 4, b2 - b3, b2 + b3)
  bool equal = false;
  std::vector<StratumData> strata;
  std::vector<std::complex<double>> stratum_values;  // embedded, for diagnostics
};

OracleReport oracle_check(const ParamPair& pair);

}  // namespace seveninv
