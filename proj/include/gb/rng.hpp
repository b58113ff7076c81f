#pragma once

#include <cmath>
#include <cstdint>

namespace gb {

// splitmix64 finalizer. Statistically solid and allows counter-based
// (order-independent) random streams: every (seed, stream, counter) triple
// maps to an independent value, so parallel consumers never share state.
inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t hash_combine(uint64_t a, uint64_t b) {
  return mix64(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

inline uint64_t rng_u64(uint64_t seed, uint64_t stream, uint64_t counter) {
  return mix64(hash_combine(hash_combine(seed, stream), counter));
}

// Uniform in [0, 1).
inline double rng_double(uint64_t seed, uint64_t stream, uint64_t counter) {
  return (rng_u64(seed, stream, counter) >> 11) * 0x1.0p-53;
}

inline double rng_exponential(uint64_t seed, uint64_t stream, uint64_t counter,
                              double rate) {
  double u = rng_double(seed, stream, counter);
  return -std::log1p(-u) / rate;
}

// Sequential generator for the few places that want a stream (generators,
// random test graphs). Deterministic in the seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(mix64(seed ^ 0x8f1b5c1e0d2f3a47ULL)) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  uint64_t next_below(uint64_t bound) { return next_u64() % bound; }

  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

}  // namespace gb
