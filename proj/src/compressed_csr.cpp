#include "gb/compressed_csr.hpp"

namespace gb {

CompressedCsrGraph CompressedCsrGraph::build(const CsrGraph& csr) {
  uint64_t n = csr.num_vertices();
  std::vector<uint64_t> offsets(n + 1, 0);
  std::vector<uint8_t> bytes;
  for (VertexId i = 0; i < n; ++i) {
    auto encoded = bytecode_encode(i, csr.neighbor_segment(i));
    bytes.insert(bytes.end(), encoded.begin(), encoded.end());
    offsets[i + 1] = bytes.size();
  }
  return CompressedCsrGraph(std::move(offsets), std::move(bytes),
                            csr.num_edges());
}

uint64_t CompressedCsrGraph::degree(VertexId i) const {
  uint64_t count = 0;
  bytecode_decode_each(i, segment(i), [&](VertexId) { ++count; });
  return count;
}

void CompressedCsrGraph::map_neighbors(VertexId i, NeighborFn f) const {
  bytecode_decode_each(i, segment(i), [&](VertexId v) { f(v); });
}

void CompressedCsrGraph::map_neighbors_early_exit(VertexId i,
                                                  NeighborStopFn f) const {
  auto seg = segment(i);
  size_t pos = 0;
  auto read_u64 = [&]() -> uint64_t {
    uint64_t value = 0;
    int shift = 0;
    while (true) {
      if (pos >= seg.size()) throw format_error("bytecode: truncated varint");
      uint8_t b = seg[pos++];
      value |= static_cast<uint64_t>(b & 0x7f) << shift;
      if ((b & 0x80) == 0) return value;
      shift += 7;
    }
  };
  if (seg.empty()) return;
  int64_t first = static_cast<int64_t>(i) + zigzag_decode(read_u64());
  VertexId cur = static_cast<VertexId>(first);
  if (f(cur)) return;
  while (pos < seg.size()) {
    cur = static_cast<VertexId>(cur + read_u64());
    if (f(cur)) return;
  }
}

}  // namespace gb
