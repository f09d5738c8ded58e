#pragma once

#include "seveninv/invariants.hpp"
#include "support/gen.hpp"

namespace seveninv::prop {

inline ParamPair mk(Triple a, Triple b) { return validate_pair(a, b); }

inline ParamPair milnor_k(std::int64_t k) { return mk({-3, -3, 1}, {1, 4 * k + 1, 4 * k + 1}); }

// Valid triple with |t1| in [min_t1, max_t1] and |t2|, |t3| <= bound.
inline Triple random_triple(Gen& g, std::int64_t min_t1, std::int64_t max_t1, std::int64_t bound) {
  while (true) {
    Triple t{g.one_mod_four(max_t1), g.one_mod_four(bound), g.one_mod_four(bound)};
    if (std::abs(t.t1) < min_t1) continue;
    std::vector<std::string> v;
    if (pair_violations(t, Triple{1, 1, 1}).empty()) return t;
  }
}

inline ParamPair random_pair(Gen& g, std::int64_t min_t1, std::int64_t max_t1, std::int64_t bound,
                             bool nonzero_n = true) {
  while (true) {
    ParamPair p = mk(random_triple(g, min_t1, max_t1, bound), random_triple(g, min_t1, max_t1, bound));
    if (!nonzero_n || h4_order(p) != 0) return p;
  }
}

}  // namespace seveninv::prop
