#pragma once

// Deterministic pseudo-random values for property tests and sampled checks.
// Only raw mt19937_64 outputs are used (the engine's sequence is fixed by the
// standard; distributions are not), so streams are identical across
// platforms and standard libraries.

#include <cstdint>
#include <random>

#include "hk4/rational.hpp"

namespace hk4 {

class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  // Uniform-ish integer in [lo, hi] (modulo bias is irrelevant here).
  long long range(long long lo, long long hi) {
    if (hi < lo) throw PreconditionError("empty range");
    return lo + (long long)(next() % (uint64_t)(hi - lo + 1));
  }

  // Nonzero integer in [-bound, bound].
  long long nonzero(long long bound) {
    for (;;) {
      long long v = range(-bound, bound);
      if (v != 0) return v;
    }
  }

  Rational rational(long long num_bound, long long den_bound) {
    return Rational(range(-num_bound, num_bound)) / Rational(range(1, den_bound));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace hk4
