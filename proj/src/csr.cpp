#include "gb/csr.hpp"

#include <atomic>

#include "gb/parallel.hpp"

namespace gb {

CsrGraph CsrGraph::build(uint64_t n, std::span<const Edge> arcs) {
  std::vector<uint64_t> offsets(n + 1, 0);
  std::vector<VertexId> neighbors;
  neighbors.reserve(arcs.size());
  const Edge* prev = nullptr;
  for (const Edge& e : arcs) {
    if (e.src >= n || e.dst >= n)
      throw format_error("csr_build: vertex id out of range");
    if (prev && !(*prev < e))
      throw format_error("csr_build: arcs must be sorted and deduplicated");
    offsets[e.src + 1] += 1;
    neighbors.push_back(e.dst);
    prev = &e;
  }
  for (uint64_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  return CsrGraph(std::move(offsets), std::move(neighbors));
}

void CsrGraph::map_neighbors(VertexId i, NeighborFn f) const {
  for (VertexId v : neighbor_segment(i)) f(v);
}

void CsrGraph::map_neighbors_early_exit(VertexId i, NeighborStopFn f) const {
  for (VertexId v : neighbor_segment(i))
    if (f(v)) return;
}

void CsrGraph::parallel_map_neighbors(VertexId i, NeighborFn f) const {
  auto seg = neighbor_segment(i);
  parallel_for(0, seg.size(), [&](size_t k) { f(seg[k]); });
}

void CsrGraph::parallel_map_neighbors_early_exit(VertexId i,
                                                 NeighborStopFn f) const {
  auto seg = neighbor_segment(i);
  if (seg.size() < 2048) {
    for (VertexId v : seg)
      if (f(v)) return;
    return;
  }
  std::atomic<bool> stop{false};
  parallel_for(
      0, seg.size(),
      [&](size_t k) {
        if (stop.load(std::memory_order_relaxed)) return;
        if (f(seg[k])) stop.store(true, std::memory_order_relaxed);
      },
      2048);
}

}  // namespace gb
