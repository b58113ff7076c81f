#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <set>
#include <vector>

#include "gb/graph_container.hpp"
#include "gb/parallel.hpp"
#include "gb/rng.hpp"
#include "gb/types.hpp"

namespace gb {

// Per-vertex set contract used by SetGraph (compile-time, no virtuals):
//   bool insert(VertexId)            true iff newly inserted
//   bool erase(VertexId)             true iff it was present
//   size_t size() const
//   bool contains(VertexId) const
//   void map(F) const                F: void(VertexId)
//   bool map_early_exit(F) const     F: bool(VertexId); stop on first true
//   uint64_t memory_bytes() const
// plus the trait constants referenced below.

// Plain sorted array. The only set here with parallel maps (index-addressable).
class SortedVectorSet {
 public:
  static constexpr bool kOrdered = true;
  static constexpr bool kParallelMap = true;
  static constexpr bool kParallelEarlyExit = true;
  static constexpr bool kNativeBatch = true;
  static constexpr BatchForm kPreferredForm = BatchForm::SemiSortLocalSort;

  bool insert(VertexId x) {
    auto it = std::lower_bound(vals_.begin(), vals_.end(), x);
    if (it != vals_.end() && *it == x) return false;
    vals_.insert(it, x);
    return true;
  }

  bool erase(VertexId x) {
    auto it = std::lower_bound(vals_.begin(), vals_.end(), x);
    if (it == vals_.end() || *it != x) return false;
    vals_.erase(it);
    return true;
  }

  bool contains(VertexId x) const {
    return std::binary_search(vals_.begin(), vals_.end(), x);
  }

  size_t size() const { return vals_.size(); }

  template <class F>
  void map(F&& f) const {
    for (VertexId v : vals_) f(v);
  }

  template <class F>
  bool map_early_exit(F&& f) const {
    for (VertexId v : vals_)
      if (f(v)) return true;
    return false;
  }

  template <class F>
  void parallel_map(F&& f) const {
    parallel_for(0, vals_.size(), [&](size_t k) { f(vals_[k]); }, 2048);
  }

  template <class F>
  void parallel_map_early_exit(F&& f) const {
    if (vals_.size() < 2048) {
      map_early_exit(f);
      return;
    }
    std::atomic<bool> stop{false};
    parallel_for(
        0, vals_.size(),
        [&](size_t k) {
          if (stop.load(std::memory_order_relaxed)) return;
          if (f(vals_[k])) stop.store(true, std::memory_order_relaxed);
        },
        2048);
  }

  // `sorted` must be ascending and deduplicated.
  uint64_t insert_batch(std::span<const VertexId> sorted) {
    std::vector<VertexId> merged;
    merged.reserve(vals_.size() + sorted.size());
    uint64_t applied = 0;
    auto a = vals_.begin();
    for (VertexId x : sorted) {
      while (a != vals_.end() && *a < x) merged.push_back(*a++);
      if (a != vals_.end() && *a == x) {
        merged.push_back(*a++);
      } else {
        merged.push_back(x);
        ++applied;
      }
    }
    merged.insert(merged.end(), a, vals_.end());
    vals_ = std::move(merged);
    return applied;
  }

  uint64_t delete_batch(std::span<const VertexId> sorted) {
    uint64_t before = vals_.size();
    auto keep = vals_.begin();
    auto d = sorted.begin();
    for (auto it = vals_.begin(); it != vals_.end(); ++it) {
      while (d != sorted.end() && *d < *it) ++d;
      if (d != sorted.end() && *d == *it) continue;
      *keep++ = *it;
    }
    vals_.erase(keep, vals_.end());
    return before - vals_.size();
  }

  uint64_t memory_bytes() const { return vals_.capacity() * sizeof(VertexId); }

 private:
  std::vector<VertexId> vals_;
};

// Balanced ordered tree (red-black under the hood).
class OrderedTreeSet {
 public:
  static constexpr bool kOrdered = true;
  static constexpr bool kParallelMap = false;
  static constexpr bool kParallelEarlyExit = false;
  static constexpr bool kNativeBatch = false;
  static constexpr BatchForm kPreferredForm = BatchForm::SemiSortLocalSort;

  bool insert(VertexId x) { return vals_.insert(x).second; }
  bool erase(VertexId x) { return vals_.erase(x) > 0; }
  bool contains(VertexId x) const { return vals_.count(x) > 0; }
  size_t size() const { return vals_.size(); }

  template <class F>
  void map(F&& f) const {
    for (VertexId v : vals_) f(v);
  }

  template <class F>
  bool map_early_exit(F&& f) const {
    for (VertexId v : vals_)
      if (f(v)) return true;
    return false;
  }

  uint64_t memory_bytes() const {
    // node: value + color + three pointers, rounded to the allocator bin
    return vals_.size() * 40;
  }

 private:
  std::set<VertexId> vals_;
};

// Open-addressing hash set, linear probing with tombstones. Iterates in
// table (hash) order; callers must not rely on any neighbor order.
class LinearProbeSet {
 public:
  static constexpr bool kOrdered = false;
  static constexpr bool kParallelMap = false;
  static constexpr bool kParallelEarlyExit = false;
  static constexpr bool kNativeBatch = false;
  static constexpr BatchForm kPreferredForm = BatchForm::SemiSort;

  LinearProbeSet() = default;

  bool insert(VertexId x) {
    if ((size_ + tombstones_ + 1) * 10 >= slots_.size() * 7) grow();
    size_t mask = slots_.size() - 1;
    size_t idx = mix64(x) & mask;
    size_t first_tombstone = kNoSlot;
    while (true) {
      VertexId s = slots_[idx];
      if (s == x) return false;
      if (s == kEmptySlot) break;
      if (s == kTombstone && first_tombstone == kNoSlot) first_tombstone = idx;
      idx = (idx + 1) & mask;
    }
    size_t target = first_tombstone != kNoSlot ? first_tombstone : idx;
    if (slots_[target] == kTombstone) --tombstones_;
    slots_[target] = x;
    ++size_;
    return true;
  }

  bool erase(VertexId x) {
    size_t idx = find_slot(x);
    if (idx == kNoSlot) return false;
    slots_[idx] = kTombstone;
    --size_;
    ++tombstones_;
    return true;
  }

  bool contains(VertexId x) const { return find_slot(x) != kNoSlot; }

  size_t size() const { return size_; }

  template <class F>
  void map(F&& f) const {
    for (VertexId s : slots_)
      if (s != kEmptySlot && s != kTombstone) f(s);
  }

  template <class F>
  bool map_early_exit(F&& f) const {
    for (VertexId s : slots_)
      if (s != kEmptySlot && s != kTombstone)
        if (f(s)) return true;
    return false;
  }

  uint64_t memory_bytes() const { return slots_.capacity() * sizeof(VertexId); }

 private:
  static constexpr VertexId kEmptySlot = UINT32_MAX;
  static constexpr VertexId kTombstone = UINT32_MAX - 1;
  static constexpr size_t kNoSlot = SIZE_MAX;

  // Slot holding x, or kNoSlot.
  size_t find_slot(VertexId x) const {
    if (slots_.empty()) return kNoSlot;
    size_t mask = slots_.size() - 1;
    size_t idx = mix64(x) & mask;
    while (true) {
      VertexId s = slots_[idx];
      if (s == x) return idx;
      if (s == kEmptySlot) return kNoSlot;
      idx = (idx + 1) & mask;
    }
  }

  void grow() {
    size_t cap = slots_.empty() ? 8 : slots_.size() * 2;
    std::vector<VertexId> old = std::move(slots_);
    slots_.assign(cap, kEmptySlot);
    tombstones_ = 0;
    size_ = 0;
    for (VertexId s : old)
      if (s != kEmptySlot && s != kTombstone) insert(s);
  }

  std::vector<VertexId> slots_;
  size_t size_ = 0;
  size_t tombstones_ = 0;
};

// Sorted fixed-capacity chunks behind a sorted directory. Splits a full
// chunk at its midpoint; re-merges adjacent chunks when both fit in one.
// Batch updates rebuild by a single merge pass, which is why this set
// wants globally sorted input.
class ChunkedSortedSet {
 public:
  static constexpr bool kOrdered = true;
  static constexpr bool kParallelMap = true;
  static constexpr bool kParallelEarlyExit = false;
  static constexpr bool kNativeBatch = true;
  static constexpr BatchForm kPreferredForm = BatchForm::GlobalSort;
  static constexpr size_t kChunkCapacity = 128;

  bool insert(VertexId x) {
    if (chunks_.empty()) {
      chunks_.push_back(make_chunk());
      chunks_[0]->push_back(x);
      ++size_;
      return true;
    }
    size_t ci = chunk_index(x);
    auto& vals = *chunks_[ci];
    auto it = std::lower_bound(vals.begin(), vals.end(), x);
    if (it != vals.end() && *it == x) return false;
    if (vals.size() == kChunkCapacity) {
      split(ci);
      ci = chunk_index(x);
      auto& v2 = *chunks_[ci];
      v2.insert(std::lower_bound(v2.begin(), v2.end(), x), x);
    } else {
      vals.insert(it, x);
    }
    ++size_;
    return true;
  }

  bool erase(VertexId x) {
    if (chunks_.empty()) return false;
    size_t ci = chunk_index(x);
    auto& vals = *chunks_[ci];
    auto it = std::lower_bound(vals.begin(), vals.end(), x);
    if (it == vals.end() || *it != x) return false;
    vals.erase(it);
    --size_;
    if (vals.empty())
      chunks_.erase(chunks_.begin() + ci);
    else
      try_merge(ci);
    return true;
  }

  bool contains(VertexId x) const {
    if (chunks_.empty()) return false;
    size_t ci = chunk_index(x);
    const auto& vals = *chunks_[ci];
    return std::binary_search(vals.begin(), vals.end(), x);
  }

  size_t size() const { return size_; }

  template <class F>
  void map(F&& f) const {
    for (const auto& c : chunks_)
      for (VertexId v : *c) f(v);
  }

  template <class F>
  bool map_early_exit(F&& f) const {
    for (const auto& c : chunks_)
      for (VertexId v : *c)
        if (f(v)) return true;
    return false;
  }

  template <class F>
  void parallel_map(F&& f) const {
    parallel_for(
        0, chunks_.size(),
        [&](size_t ci) {
          for (VertexId v : *chunks_[ci]) f(v);
        },
        8);
  }

  uint64_t insert_batch(std::span<const VertexId> sorted) {
    if (sorted.empty()) return 0;
    std::vector<VertexId> all;
    all.reserve(size_ + sorted.size());
    map([&](VertexId v) { all.push_back(v); });
    std::vector<VertexId> merged;
    merged.reserve(all.size() + sorted.size());
    std::merge(all.begin(), all.end(), sorted.begin(), sorted.end(),
               std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    uint64_t applied = merged.size() - all.size();
    rebuild(merged);
    return applied;
  }

  uint64_t delete_batch(std::span<const VertexId> sorted) {
    if (sorted.empty() || size_ == 0) return 0;
    std::vector<VertexId> all;
    all.reserve(size_);
    map([&](VertexId v) { all.push_back(v); });
    std::vector<VertexId> kept;
    kept.reserve(all.size());
    std::set_difference(all.begin(), all.end(), sorted.begin(), sorted.end(),
                        std::back_inserter(kept));
    uint64_t applied = all.size() - kept.size();
    rebuild(kept);
    return applied;
  }

  uint64_t memory_bytes() const {
    uint64_t bytes = chunks_.capacity() * sizeof(void*);
    for (const auto& c : chunks_)
      bytes += sizeof(*c) + c->capacity() * sizeof(VertexId);
    return bytes;
  }

  size_t chunk_count() const { return chunks_.size(); }

 private:
  using Chunk = std::vector<VertexId>;

  static std::unique_ptr<Chunk> make_chunk() {
    auto c = std::make_unique<Chunk>();
    c->reserve(kChunkCapacity);
    return c;
  }

  // Index of the chunk whose range covers x (directory is sorted by first
  // element; chunks are never empty).
  size_t chunk_index(VertexId x) const {
    size_t lo = 0, hi = chunks_.size();
    while (hi - lo > 1) {
      size_t mid = (lo + hi) / 2;
      if (chunks_[mid]->front() <= x)
        lo = mid;
      else
        hi = mid;
    }
    return lo;
  }

  void split(size_t ci) {
    auto& vals = *chunks_[ci];
    auto upper = make_chunk();
    size_t mid = vals.size() / 2;
    upper->assign(vals.begin() + mid, vals.end());
    vals.resize(mid);
    chunks_.insert(chunks_.begin() + ci + 1, std::move(upper));
  }

  void try_merge(size_t ci) {
    auto fits = [&](size_t a, size_t b) {
      return chunks_[a]->size() + chunks_[b]->size() <= kChunkCapacity;
    };
    if (ci + 1 < chunks_.size() && fits(ci, ci + 1)) {
      merge_into(ci);
    } else if (ci > 0 && fits(ci - 1, ci)) {
      merge_into(ci - 1);
    }
  }

  void merge_into(size_t ci) {
    auto& a = *chunks_[ci];
    auto& b = *chunks_[ci + 1];
    a.insert(a.end(), b.begin(), b.end());
    chunks_.erase(chunks_.begin() + ci + 1);
  }

  void rebuild(const std::vector<VertexId>& sorted) {
    chunks_.clear();
    size_ = sorted.size();
    // refill at half capacity so the next inserts do not split immediately
    size_t fill = kChunkCapacity / 2;
    for (size_t pos = 0; pos < sorted.size(); pos += fill) {
      size_t end = std::min(pos + fill, sorted.size());
      auto c = make_chunk();
      c->assign(sorted.begin() + pos, sorted.begin() + end);
      chunks_.push_back(std::move(c));
    }
  }

  std::vector<std::unique_ptr<Chunk>> chunks_;
  size_t size_ = 0;
};

}  // namespace gb
