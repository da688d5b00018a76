#pragma once

#include <cstdint>
#include <string>

#include "g2/rat.hpp"

namespace g2 {

// Deterministic stream generator: splitmix64 seeded from a base seed and a
// stream label. Identical output on every platform, so sampled checks and
// reports are reproducible byte for byte.
class Rng {
 public:
  Rng(uint64_t seed, const std::string& stream) {
    uint64_t h = 1469598103934665603ull;  // FNV-1a over the label
    for (unsigned char ch : stream) {
      h ^= ch;
      h *= 1099511628211ull;
    }
    state_ = seed ^ h;
    // decorrelate nearby seeds
    next_u64();
    next_u64();
  }

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform on [lo, hi], inclusive, by rejection
  long uniform(long lo, long hi) {
    if (lo > hi) throw input_error("empty sampling range");
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long>(next_u64());  // full 64-bit range
    uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t r;
    do {
      r = next_u64();
    } while (r >= limit);
    return lo + static_cast<long>(r % span);
  }

  bool coin() { return next_u64() & 1; }

  // small exact rational with numerator in [-mag, mag] and denominator in [1, den_max]
  Rat rational(long mag, long den_max) {
    if (mag < 0 || den_max < 1) throw input_error("bad rational sampling bounds");
    return Rat(uniform(-mag, mag), uniform(1, den_max));
  }

  Rat nonzero_rational(long mag, long den_max) {
    if (mag < 1) throw input_error("bad rational sampling bounds");
    Rat r;
    do {
      r = rational(mag, den_max);
    } while (r.is_zero());
    return r;
  }

  // p-adic unit: a rational with numerator and denominator prime to p
  Rat unit_at(unsigned long p, long mag) {
    if (!is_prime(p)) throw input_error("p-adic sampling requires a prime p");
    long num, den;
    do {
      num = uniform(-mag, mag);
    } while (num == 0 || num % static_cast<long>(p) == 0);
    do {
      den = uniform(1, mag);
    } while (den % static_cast<long>(p) == 0);
    return Rat(num, den);
  }

  // rational with exact p-adic valuation v
  Rat with_valuation(unsigned long p, long v, long mag) {
    Rat u = unit_at(p, mag);
    return u * Rat(static_cast<long>(p)).pow(static_cast<int>(v));
  }

  // rational with valuation >= floor (bounded above for size control)
  Rat at_least_valuation(unsigned long p, long floor_v, long spread, long mag) {
    return with_valuation(p, uniform(floor_v, floor_v + spread), mag);
  }

 private:
  uint64_t state_;
};

}  // namespace g2
