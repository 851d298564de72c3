#pragma once

// Deterministic seeded randomness. mt19937_64 output is pinned by the C++
// standard, so seeded runs are reproducible across platforms; the standard
// distributions are NOT pinned, hence the modulo draws below.

#include "mobius/rational.hpp"

#include <cstdint>
#include <random>

namespace mobius {

class Prng {
 public:
  explicit Prng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform-ish integer in [lo, hi]; the modulo bias is irrelevant for
  // test-vector generation.
  long long int_in(long long lo, long long hi) {
    if (hi < lo) throw std::invalid_argument("empty range");
    const std::uint64_t width = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(gen_() % width);
  }

  Rat small_rat(long long max_abs_num = 9, long long max_den = 4) {
    Int n(int_in(-max_abs_num, max_abs_num));
    Int d(int_in(1, max_den));
    return Rat(n, d);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace mobius
