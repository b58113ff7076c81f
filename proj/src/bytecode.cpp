#include "gb/bytecode.hpp"

namespace gb {

void bytecode_append_u64(std::vector<uint8_t>& out, uint64_t value) {
  while (value >= 0x80) {
    out.push_back(static_cast<uint8_t>(value) | 0x80);
    value >>= 7;
  }
  out.push_back(static_cast<uint8_t>(value));
}

std::vector<uint8_t> bytecode_encode(VertexId source,
                                     std::span<const VertexId> neighbors) {
  std::vector<uint8_t> out;
  if (neighbors.empty()) return out;
  int64_t first_delta =
      static_cast<int64_t>(neighbors[0]) - static_cast<int64_t>(source);
  bytecode_append_u64(out, zigzag_encode(first_delta));
  for (size_t k = 1; k < neighbors.size(); ++k)
    bytecode_append_u64(out, neighbors[k] - neighbors[k - 1]);
  return out;
}

std::vector<VertexId> bytecode_decode(VertexId source,
                                      std::span<const uint8_t> bytes) {
  std::vector<VertexId> out;
  bytecode_decode_each(source, bytes, [&](VertexId v) { out.push_back(v); });
  return out;
}

}  // namespace gb
