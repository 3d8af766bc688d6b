#pragma once

#include <cstdint>

namespace wordmaps {

// The project-wide pseudorandom generator: SplitMix64 (Steele, Lea, Flood,
// "Fast splittable pseudorandom number generators", OOPSLA 2014). It is
// counter-based: output i of a stream with initial state s0 is
// mix64(s0 + (i+1)*GAMMA), so a stream is a pure function of (s0, i).
//
// Substreams: stream t of master seed S starts at mix64(S + (t+1)*GAMMA).
// Monte Carlo trials and tower trials each own a substream, which makes every
// result a function of (seed, trial) alone, independent of scheduling.

inline constexpr uint64_t kRngGamma = 0x9E3779B97F4A7C15ull;

inline constexpr uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(uint64_t state) : state_(state) {}

  static Rng from_seed(uint64_t seed) { return Rng(seed); }

  // Initial state of substream t of `seed`; also usable as a standalone seed.
  static uint64_t substream_state(uint64_t seed, uint64_t t) {
    return mix64(seed + (t + 1) * kRngGamma);
  }

  static Rng substream(uint64_t seed, uint64_t t) {
    return Rng(substream_state(seed, t));
  }

  uint64_t next() {
    state_ += kRngGamma;
    return mix64(state_);
  }

  // Exactly uniform on [0, n): rejection on the top of the 64-bit range.
  uint64_t below(uint64_t n) {
    if (n <= 1) return 0;
    const uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      uint64_t x = next();
      if (x >= threshold) return x % n;
    }
  }

  uint64_t state() const { return state_; }

 private:
  uint64_t state_;
};

}  // namespace wordmaps
