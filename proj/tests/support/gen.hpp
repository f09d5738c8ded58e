#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "seveninv/cyclotomic.hpp"
#include "seveninv/rational.hpp"

namespace seveninv::prop {

// Small deterministic generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  std::int64_t nonzero(std::int64_t bound) {
    std::int64_t v = 0;
    while (v == 0) v = range(-bound, bound);
    return v;
  }

  // Odd value with 1 <= |v| <= bound.
  std::int64_t odd(std::int64_t bound) {
    std::int64_t v = 0;
    while (v % 2 == 0) v = range(-bound, bound);
    return v;
  }

  // Value congruent to 1 mod 4 in [-bound, bound].
  std::int64_t one_mod_four(std::int64_t bound) {
    std::int64_t v = 0;
    do {
      v = range(-bound, bound);
    } while (((v % 4) + 4) % 4 != 1);
    return v;
  }

  Rational rational(std::int64_t bound) { return Rational(Integer(range(-bound, bound)), Integer(range(1, bound))); }

  CyclotomicElement element(int conductor, std::int64_t bound) {
    std::vector<Rational> c(static_cast<std::size_t>(euler_phi(conductor)));
    for (auto& x : c) x = rational(bound);
    return CyclotomicElement::from_coefficients(conductor, c);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace seveninv::prop
