#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gb/graph_container.hpp"
#include "gb/metadata.hpp"
#include "gb/neighbor_sets.hpp"
#include "gb/parallel.hpp"

namespace gb {

template <class Set>
constexpr bool set_has_size = requires(const Set& s) { s.size(); };

// Lifts a sequence of per-vertex sets into the whole-graph contract.
// Nothing beyond the set contract is required of Set: degree and edge
// totals fall back to framework metadata when the set type has no size(),
// and early exit comes from the set's own iteration.
//
// The first `inline_k` neighbors of each vertex live directly in the
// vertex table, in append order; the spill set holds the rest and is only
// populated while the inline slots are full. Map order over a vertex is
// unspecified.
template <class Set>
class SetGraph final : public GraphContainer {
 public:
  static constexpr size_t kMaxInline = 16;

  SetGraph(uint64_t n, size_t inline_k)
      : entries_(n), meta_(n), inline_k_(std::min(inline_k, kMaxInline)) {}

  // Adopts pre-built sets (indexed 0..n-1).
  SetGraph(std::vector<Set> sets, size_t inline_k)
      : entries_(sets.size()), meta_(sets.size()),
        inline_k_(std::min(inline_k, kMaxInline)) {
    for (size_t i = 0; i < sets.size(); ++i) {
      entries_[i].spill = std::move(sets[i]);
      refill_inline(entries_[i]);
      uint64_t deg = 0;
      map_neighbors(static_cast<VertexId>(i), [&](VertexId) { ++deg; });
      meta_.add_degree(static_cast<VertexId>(i), static_cast<int64_t>(deg));
      meta_.add_total(static_cast<int64_t>(deg));
    }
  }

  uint64_t num_vertices() const override { return entries_.size(); }

  uint64_t num_edges() const override { return meta_.total_edges(); }

  uint64_t degree(VertexId i) const override {
    if constexpr (set_has_size<Set>) {
      return entries_[i].inline_count + entries_[i].spill.size();
    } else {
      return meta_.degree(i);
    }
  }

  void map_neighbors(VertexId i, NeighborFn f) const override {
    const Entry& e = entries_[i];
    for (size_t k = 0; k < e.inline_count; ++k) f(e.inline_slots[k]);
    e.spill.map([&](VertexId v) { f(v); });
  }

  void map_neighbors_early_exit(VertexId i, NeighborStopFn f) const override {
    const Entry& e = entries_[i];
    for (size_t k = 0; k < e.inline_count; ++k)
      if (f(e.inline_slots[k])) return;
    e.spill.map_early_exit([&](VertexId v) { return f(v); });
  }

  void parallel_map_neighbors(VertexId i, NeighborFn f) const override {
    const Entry& e = entries_[i];
    for (size_t k = 0; k < e.inline_count; ++k) f(e.inline_slots[k]);
    if constexpr (Set::kParallelMap) {
      e.spill.parallel_map([&](VertexId v) { f(v); });
    } else {
      e.spill.map([&](VertexId v) { f(v); });
    }
  }

  void parallel_map_neighbors_early_exit(VertexId i,
                                         NeighborStopFn f) const override {
    const Entry& e = entries_[i];
    for (size_t k = 0; k < e.inline_count; ++k)
      if (f(e.inline_slots[k])) return;
    if constexpr (Set::kParallelEarlyExit) {
      e.spill.parallel_map_early_exit([&](VertexId v) { return f(v); });
    } else {
      e.spill.map_early_exit([&](VertexId v) { return f(v); });
    }
  }

  Capabilities capabilities() const override {
    return {true, true, true, Set::kParallelMap, Set::kParallelEarlyExit,
            true};
  }

  bool insert_edge(Edge e) override {
    bool applied = insert_arc(e);
    meta_.on_update(e, MetadataTracker::Kind::Insert, applied);
    return applied;
  }

  bool delete_edge(Edge e) override {
    bool applied = erase_arc(e);
    meta_.on_update(e, MetadataTracker::Kind::Delete, applied);
    return applied;
  }

  // Batch must be grouped by source (all three prepared forms are) and
  // deduplicated. Groups are applied in parallel; each vertex's entry and
  // degree cell is touched by exactly one worker.
  uint64_t insert_sorted_batch(std::span<const Edge> batch) override {
    return apply_batch(batch, /*insert=*/true);
  }

  uint64_t delete_sorted_batch(std::span<const Edge> batch) override {
    return apply_batch(batch, /*insert=*/false);
  }

  BatchForm preferred_batch_form() const override {
    return Set::kPreferredForm;
  }

  uint64_t memory_bytes() const override {
    uint64_t bytes = entries_.size() * sizeof(Entry);
    for (const Entry& e : entries_) bytes += e.spill.memory_bytes();
    return bytes;
  }

  const Set& spill_set(VertexId i) const { return entries_[i].spill; }
  size_t inline_count(VertexId i) const { return entries_[i].inline_count; }
  size_t inline_k() const { return inline_k_; }

 private:
  struct Entry {
    std::array<VertexId, kMaxInline> inline_slots{};
    uint8_t inline_count = 0;
    Set spill;
  };

  void check_arc(Edge e) const {
    if (e.src >= entries_.size() || e.dst >= entries_.size())
      throw std::out_of_range("edge endpoint out of range");
    if (e.src == e.dst)
      throw std::invalid_argument("self-loops are rejected at ingestion");
  }

  bool inline_contains(const Entry& e, VertexId dst) const {
    for (size_t k = 0; k < e.inline_count; ++k)
      if (e.inline_slots[k] == dst) return true;
    return false;
  }

  bool insert_arc(Edge arc) {
    check_arc(arc);
    Entry& e = entries_[arc.src];
    if (inline_contains(e, arc.dst)) return false;
    if (e.inline_count < inline_k_) {
      // inline fills before the spill, so membership in the spill is
      // impossible here
      e.inline_slots[e.inline_count++] = arc.dst;
      return true;
    }
    return e.spill.insert(arc.dst);
  }

  bool erase_arc(Edge arc) {
    check_arc(arc);
    Entry& e = entries_[arc.src];
    for (size_t k = 0; k < e.inline_count; ++k) {
      if (e.inline_slots[k] == arc.dst) {
        e.inline_slots[k] = e.inline_slots[--e.inline_count];
        refill_inline(e);
        return true;
      }
    }
    return e.spill.erase(arc.dst);
  }

  // Restore the fill-inline-first invariant after inline deletions.
  void refill_inline(Entry& e) {
    while (e.inline_count < inline_k_) {
      VertexId moved = kNoVertex;
      e.spill.map_early_exit([&](VertexId v) {
        moved = v;
        return true;
      });
      if (moved == kNoVertex) break;
      e.spill.erase(moved);
      e.inline_slots[e.inline_count++] = moved;
    }
  }

  uint64_t apply_batch(std::span<const Edge> batch, bool insert) {
    // source-contiguous input -> group boundaries by linear scan
    std::vector<std::pair<size_t, size_t>> groups;
    for (size_t i = 0; i < batch.size();) {
      size_t j = i;
      while (j < batch.size() && batch[j].src == batch[i].src) ++j;
      groups.emplace_back(i, j);
      i = j;
    }
    std::vector<int64_t> applied(groups.size(), 0);
    parallel_for(
        0, groups.size(),
        [&](size_t g) {
          auto [lo, hi] = groups[g];
          VertexId src = batch[lo].src;
          int64_t count = 0;
          if constexpr (Set::kNativeBatch) {
            // the native merge path wants sorted spill-only input
            if (inline_k_ == 0 && group_sorted(batch, lo, hi)) {
              std::vector<VertexId> dsts;
              dsts.reserve(hi - lo);
              for (size_t k = lo; k < hi; ++k) dsts.push_back(batch[k].dst);
              Entry& e = entries_[src];
              count = insert
                          ? static_cast<int64_t>(e.spill.insert_batch(dsts))
                          : static_cast<int64_t>(e.spill.delete_batch(dsts));
              meta_.add_degree(src, insert ? count : -count);
              applied[g] = count;
              return;
            }
          }
          for (size_t k = lo; k < hi; ++k)
            count += insert ? insert_arc(batch[k]) : erase_arc(batch[k]);
          meta_.add_degree(src, insert ? count : -count);
          applied[g] = count;
        },
        1);
    int64_t total = 0;
    for (int64_t a : applied) total += a;
    meta_.add_total(insert ? total : -total);
    return static_cast<uint64_t>(total);
  }

  static bool group_sorted(std::span<const Edge> batch, size_t lo, size_t hi) {
    for (size_t k = lo + 1; k < hi; ++k)
      if (batch[k].dst <= batch[k - 1].dst) return false;
    return true;
  }

  std::vector<Entry> entries_;
  MetadataTracker meta_;
  size_t inline_k_;
};

using VectorSetGraph = SetGraph<SortedVectorSet>;
using TreeSetGraph = SetGraph<OrderedTreeSet>;
using HashSetGraph = SetGraph<LinearProbeSet>;
using ChunkedSetGraph = SetGraph<ChunkedSortedSet>;

}  // namespace gb
