#pragma once

#include <cstdint>
#include <random>

#include "seveninv/defect.hpp"
#include "seveninv/invariants.hpp"

namespace seveninv {

/// Uniform value congruent to 1 mod 4 in [-bound, bound].
std::int64_t sample_one_mod_four(std::mt19937_64& rng, std::int64_t bound);

/// Valid triple with min_t1 <= |t1| <= max_t1 and |t2|, |t3| <= bound.
Triple sample_triple(std::mt19937_64& rng, std::int64_t min_t1, std::int64_t max_t1, std::int64_t bound);

/// Valid pair of such triples, redrawn until n != 0 when nonzero_n is set.
ParamPair sample_pair(std::mt19937_64& rng, std::int64_t min_t1, std::int64_t max_t1, std::int64_t bound,
                      bool nonzero_n = true);

/// Odd q with 1 <= |q| <= max_q and even p_j coprime to q with |p_j| <= 4 max_q.
DefectArgs sample_defect_args(std::mt19937_64& rng, std::int64_t max_q);

}  // namespace seveninv
