#pragma once

#include <cstdint>
#include <vector>

#include "gb/graph_container.hpp"

namespace gb {

// Classical static compressed-sparse-row storage: one flat neighbor array,
// one offset per vertex. Fast to scan, rejects updates.
class CsrGraph final : public GraphContainer {
 public:
  CsrGraph() : offsets_(1, 0) {}

  // `arcs` must be sorted by (src, dst), deduplicated, with all ids < n.
  static CsrGraph build(uint64_t n, std::span<const Edge> arcs);

  uint64_t num_vertices() const override { return offsets_.size() - 1; }
  uint64_t num_edges() const override { return neighbors_.size(); }
  uint64_t degree(VertexId i) const override {
    return offsets_[i + 1] - offsets_[i];
  }

  void map_neighbors(VertexId i, NeighborFn f) const override;
  void map_neighbors_early_exit(VertexId i, NeighborStopFn f) const override;
  void parallel_map_neighbors(VertexId i, NeighborFn f) const override;
  void parallel_map_neighbors_early_exit(VertexId i,
                                         NeighborStopFn f) const override;

  Capabilities capabilities() const override {
    return {true, true, true, true, true, false};
  }

  uint64_t memory_bytes() const override {
    return offsets_.size() * sizeof(uint64_t) +
           neighbors_.size() * sizeof(VertexId);
  }

  std::span<const VertexId> neighbor_segment(VertexId i) const {
    return {neighbors_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

  const std::vector<uint64_t>& offsets() const { return offsets_; }
  const std::vector<VertexId>& neighbors() const { return neighbors_; }

 private:
  CsrGraph(std::vector<uint64_t> offsets, std::vector<VertexId> neighbors)
      : offsets_(std::move(offsets)), neighbors_(std::move(neighbors)) {}

  std::vector<uint64_t> offsets_;   // length n+1, offsets_[n] == m
  std::vector<VertexId> neighbors_; // sorted within each vertex segment
};

}  // namespace gb
