#pragma once

#include <cstdint>

#include "seveninv/rational.hpp"

namespace seveninv {

/// Arguments of D(q; p1, p2, p3). q must be odd and nonzero. Each p_j must be
/// coprime to q, which is exactly the condition that no sine in the sum
/// vanishes, and even: then every summand lies in Q(zeta_q) and the sum over
/// l is Galois stable, hence rational. Odd p_j give irrational sums in general.
struct DefectArgs {
  std::int64_t q = 1;
  std::int64_t p1 = 0;
  std::int64_t p2 = 0;
  std::int64_t p3 = 0;
};

/// Throws InputError for even or zero q or odd p_j, and DegenerateDefect
/// when some p_j shares a factor with q.
void check_defect_args(const DefectArgs& args);

/// D(q; p) = 1/(224 q^2) * sum_{l=1}^{(|q|-1)/2} sum_cyc
///   p_i [14 cos a_i + cos a_j cos a_k] / [sin^2 a_i sin a_j sin a_k],
/// a_i = p_i pi l / q, summed exactly in Q(zeta_|q|) (even p keeps every
/// summand in that field).
///
/// The prefactor p_i makes D affine, not periodic, in each p_i:
/// D(q; p1, p2, p3 + 2qt) = D(q; p) + t * (D(q; p1, p2, p3 + 2q) - D(q; p)).
Rational defect_D_exact(const DefectArgs& args);

/// The same double sum in double precision.
double defect_D_float(const DefectArgs& args);

}  // namespace seveninv
