#pragma once

#include <cstdint>
#include <vector>

#include "gb/types.hpp"

namespace gb {

// A frontier over a universe of n vertices. Holds either a sorted,
// deduplicated id list (sparse) or a bit array with one bit per vertex
// (dense); bit k of the array is vertex k, least-significant bit first
// within each 64-bit word. Immutable after construction, so concurrent
// reads need no synchronization.
class VertexSubset {
 public:
  enum class Repr { Sparse, Dense };

  static VertexSubset empty(uint64_t n) {
    return VertexSubset(n, std::vector<VertexId>{});
  }

  static VertexSubset singleton(uint64_t n, VertexId v) {
    if (v >= n) throw std::out_of_range("subset_singleton: vertex out of range");
    return VertexSubset(n, std::vector<VertexId>{v});
  }

  // Sorts and deduplicates; every id must be < n.
  VertexSubset(uint64_t n, std::vector<VertexId> ids);

  // Takes bit words as-is; bits at positions >= n must be zero.
  VertexSubset(uint64_t n, std::vector<uint64_t> bits, Repr tag);

  uint64_t universe_size() const { return n_; }
  uint64_t size() const { return cached_size_; }
  Repr repr() const { return repr_; }
  bool is_dense() const { return repr_ == Repr::Dense; }

  bool contains(VertexId v) const;

  // Same member set, dense bit-array representation (identity when already
  // dense).
  VertexSubset to_dense() const;

  // Same member set, sorted sparse representation (identity when already
  // sparse).
  VertexSubset to_sparse() const;

  // Sparse id list (ascending). Only valid on sparse subsets.
  const std::vector<VertexId>& ids() const { return ids_; }

  // Bit words. Only valid on dense subsets.
  const std::vector<uint64_t>& words() const { return words_; }

  template <class F>
  void for_each(F&& f) const {
    if (repr_ == Repr::Sparse) {
      for (VertexId v : ids_) f(v);
    } else {
      for (size_t w = 0; w < words_.size(); ++w) {
        uint64_t bits = words_[w];
        while (bits != 0) {
          unsigned bit = static_cast<unsigned>(__builtin_ctzll(bits));
          f(static_cast<VertexId>(w * 64 + bit));
          bits &= bits - 1;
        }
      }
    }
  }

 private:
  uint64_t n_;
  Repr repr_;
  uint64_t cached_size_;
  std::vector<VertexId> ids_;
  std::vector<uint64_t> words_;
};

inline VertexSubset subset_singleton(uint64_t n, VertexId v) {
  return VertexSubset::singleton(n, v);
}

inline VertexSubset subset_to_dense(const VertexSubset& s) {
  return s.to_dense();
}

inline VertexSubset subset_to_sparse(const VertexSubset& s) {
  return s.to_sparse();
}

inline bool subset_contains(const VertexSubset& s, VertexId v) {
  if (v >= s.universe_size())
    throw std::out_of_range("subset_contains: vertex out of range");
  return s.contains(v);
}

}  // namespace gb
