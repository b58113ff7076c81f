#pragma once

#include <cstdint>
#include <vector>

#include "gb/bytecode.hpp"
#include "gb/csr.hpp"
#include "gb/graph_container.hpp"

namespace gb {

// CSR with gap-compressed neighbor segments. Static like CsrGraph; decoding
// is sequential per vertex, so the parallel map variants are not offered.
class CompressedCsrGraph final : public GraphContainer {
 public:
  static CompressedCsrGraph build(const CsrGraph& csr);

  uint64_t num_vertices() const override { return byte_offsets_.size() - 1; }
  uint64_t num_edges() const override { return m_; }
  uint64_t degree(VertexId i) const override;

  void map_neighbors(VertexId i, NeighborFn f) const override;
  void map_neighbors_early_exit(VertexId i, NeighborStopFn f) const override;

  Capabilities capabilities() const override {
    return {true, true, true, false, false, false};
  }

  uint64_t memory_bytes() const override {
    return byte_offsets_.size() * sizeof(uint64_t) + bytes_.size();
  }

  std::span<const uint8_t> segment(VertexId i) const {
    return {bytes_.data() + byte_offsets_[i],
            byte_offsets_[i + 1] - byte_offsets_[i]};
  }

 private:
  CompressedCsrGraph(std::vector<uint64_t> offsets, std::vector<uint8_t> bytes,
                     uint64_t m)
      : byte_offsets_(std::move(offsets)), bytes_(std::move(bytes)), m_(m) {}

  std::vector<uint64_t> byte_offsets_; // byte positions, length n+1
  std::vector<uint8_t> bytes_;
  uint64_t m_;
};

}  // namespace gb
