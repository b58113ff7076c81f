#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "gb/rng.hpp"
#include "gb/types.hpp"

namespace gb {

// Order-sensitive 64-bit stream hash for canonical outputs. Reals are
// rounded to 1e-9 before hashing so equal-up-to-noise runs can still be
// compared through the exact integer path when they are bit-identical.
class Digest {
 public:
  void absorb(uint64_t x) { h_ = hash_combine(h_, x); }

  void absorb_real(double x) {
    absorb(static_cast<uint64_t>(std::llround(x * 1e9)));
  }

  uint64_t value() const { return mix64(h_); }

 private:
  uint64_t h_ = 0x6a09e667f3bcc908ULL;
};

// What an algorithm run produces for comparison purposes: exact integer
// data (distances, labels, memberships, arc lists) and real-valued data
// (scores) that cross-container checks compare within a tolerance.
struct CanonicalOutput {
  std::vector<uint64_t> ints;
  std::vector<double> reals;

  uint64_t digest() const {
    Digest d;
    d.absorb(ints.size());
    for (uint64_t x : ints) d.absorb(x);
    d.absorb(reals.size());
    for (double x : reals) d.absorb_real(x);
    return d.value();
  }
};

}  // namespace gb
