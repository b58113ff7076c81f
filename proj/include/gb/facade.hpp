#pragma once

#include <atomic>

#include "gb/graph_container.hpp"
#include "gb/parallel.hpp"
#include "gb/vertex_subset.hpp"

namespace gb {

// What the traversal engine and algorithms actually program against: the
// container's advertised operations where present, framework fallbacks
// everywhere else. Missing degree turns into a counting map, missing
// num_edges into a degree sum, missing early exit into a guarded full
// scan (the user function stops being invoked after the first true, but
// the scan itself runs to the end — that cost is the point of measuring
// reduced APIs).
class GraphView {
 public:
  explicit GraphView(const GraphContainer& g)
      : g_(&g), caps_(g.capabilities()) {}

  const GraphContainer& container() const { return *g_; }
  const Capabilities& caps() const { return caps_; }

  uint64_t num_vertices() const { return g_->num_vertices(); }

  uint64_t degree(VertexId i) const {
    if (caps_.has_degree) return g_->degree(i);
    uint64_t count = 0;
    g_->map_neighbors(i, [&](VertexId) { ++count; });
    return count;
  }

  uint64_t num_edges() const {
    if (caps_.has_num_edges) return g_->num_edges();
    uint64_t n = g_->num_vertices();
    std::atomic<uint64_t> total{0};
    parallel_for(0, n, [&](size_t i) {
      total.fetch_add(degree(static_cast<VertexId>(i)),
                      std::memory_order_relaxed);
    });
    return total.load();
  }

  void map_neighbors(VertexId i, NeighborFn f) const {
    g_->map_neighbors(i, f);
  }

  void map_neighbors_early_exit(VertexId i, NeighborStopFn f) const {
    if (caps_.has_map_early_exit) {
      g_->map_neighbors_early_exit(i, f);
      return;
    }
    bool stopped = false;
    g_->map_neighbors(i, [&](VertexId v) {
      if (stopped) return;
      if (f(v)) stopped = true;
    });
  }

  void parallel_map_neighbors(VertexId i, NeighborFn f) const {
    if (caps_.has_parallel_map) {
      g_->parallel_map_neighbors(i, f);
      return;
    }
    g_->map_neighbors(i, f);
  }

  void parallel_map_neighbors_early_exit(VertexId i, NeighborStopFn f) const {
    if (caps_.has_parallel_map_early_exit) {
      g_->parallel_map_neighbors_early_exit(i, f);
      return;
    }
    map_neighbors_early_exit(i, f);
  }

  uint64_t out_degree_sum(const VertexSubset& frontier) const {
    std::atomic<uint64_t> total{0};
    if (frontier.is_dense()) {
      const auto& words = frontier.words();
      parallel_for(0, words.size(), [&](size_t w) {
        uint64_t bits = words[w];
        uint64_t local = 0;
        while (bits != 0) {
          unsigned bit = static_cast<unsigned>(__builtin_ctzll(bits));
          local += degree(static_cast<VertexId>(w * 64 + bit));
          bits &= bits - 1;
        }
        if (local) total.fetch_add(local, std::memory_order_relaxed);
      }, 64);
    } else {
      const auto& ids = frontier.ids();
      parallel_for(0, ids.size(), [&](size_t k) {
        total.fetch_add(degree(ids[k]), std::memory_order_relaxed);
      });
    }
    return total.load();
  }

 private:
  const GraphContainer* g_;
  Capabilities caps_;
};

}  // namespace gb
