#include "seveninv/sampling.hpp"

#include <numeric>

#include "seveninv/errors.hpp"

namespace seveninv {

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

std::int64_t sample_one_mod_four(std::mt19937_64& rng, std::int64_t bound) {
  if (bound < 1) throw InputError("bound must be >= 1");
  // v = 1 + 4k with -bound <= v <= bound.
  const std::int64_t lo = -((bound + 1) / 4);
  const std::int64_t hi = (bound - 1) / 4;
  return 1 + 4 * uniform(rng, lo, hi);
}

Triple sample_triple(std::mt19937_64& rng, std::int64_t min_t1, std::int64_t max_t1, std::int64_t bound) {
  if (min_t1 > max_t1 || max_t1 < 1) throw InputError("empty range for t1");
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    const Triple t{sample_one_mod_four(rng, max_t1), sample_one_mod_four(rng, bound), sample_one_mod_four(rng, bound)};
    if (std::abs(t.t1) < min_t1) continue;
    if (pair_violations(t, Triple{1, 1, 1}).empty()) return t;
  }
  throw InputError("no valid triple found in the requested range");
}

ParamPair sample_pair(std::mt19937_64& rng, std::int64_t min_t1, std::int64_t max_t1, std::int64_t bound,
                      bool nonzero_n) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    ParamPair p = validate_pair(sample_triple(rng, min_t1, max_t1, bound), sample_triple(rng, min_t1, max_t1, bound));
    if (!nonzero_n || h4_order(p) != 0) return p;
  }
  throw InputError("no pair with n != 0 found in the requested range");
}

DefectArgs sample_defect_args(std::mt19937_64& rng, std::int64_t max_q) {
  if (max_q < 1) throw InputError("max_q must be >= 1");
  DefectArgs a;
  do {
    a.q = uniform(rng, -max_q, max_q);
  } while (a.q % 2 == 0);
  auto coprime = [&] {
    std::int64_t p = 0;
    do {
      p = 2 * uniform(rng, -2 * max_q, 2 * max_q);
    } while (std::gcd(p, a.q) != 1);
    return p;
  };
  a.p1 = coprime();
  a.p2 = coprime();
  a.p3 = coprime();
  return a;
}

}  // namespace seveninv
