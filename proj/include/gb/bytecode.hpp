#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gb/types.hpp"

namespace gb {

// Gap-compressed neighbor lists. The first neighbor is stored as a signed
// difference from the source vertex (zigzag-mapped: 2x for x >= 0,
// -2x-1 for x < 0); each following neighbor as the unsigned gap to its
// predecessor. Values are base-128 varints, low 7 bits first, high bit of
// each byte marking continuation.

void bytecode_append_u64(std::vector<uint8_t>& out, uint64_t value);

inline uint64_t zigzag_encode(int64_t x) {
  return x >= 0 ? 2 * static_cast<uint64_t>(x)
                : 2 * static_cast<uint64_t>(-(x + 1)) + 1;
}

inline int64_t zigzag_decode(uint64_t z) {
  return (z & 1) ? -static_cast<int64_t>(z >> 1) - 1
                 : static_cast<int64_t>(z >> 1);
}

// `neighbors` must be strictly increasing.
std::vector<uint8_t> bytecode_encode(VertexId source,
                                     std::span<const VertexId> neighbors);

// Exact inverse of bytecode_encode; throws format_error on truncation.
std::vector<VertexId> bytecode_decode(VertexId source,
                                      std::span<const uint8_t> bytes);

// Streaming decode without materializing the list. F: void(VertexId).
template <class F>
void bytecode_decode_each(VertexId source, std::span<const uint8_t> bytes,
                          F&& f) {
  size_t pos = 0;
  auto read_u64 = [&]() -> uint64_t {
    uint64_t value = 0;
    int shift = 0;
    while (true) {
      if (pos >= bytes.size())
        throw format_error("bytecode: truncated varint");
      uint8_t b = bytes[pos++];
      value |= static_cast<uint64_t>(b & 0x7f) << shift;
      if ((b & 0x80) == 0) return value;
      shift += 7;
    }
  };
  if (bytes.empty()) return;
  int64_t first = static_cast<int64_t>(source) + zigzag_decode(read_u64());
  VertexId cur = static_cast<VertexId>(first);
  f(cur);
  while (pos < bytes.size()) {
    cur = static_cast<VertexId>(cur + read_u64());
    f(cur);
  }
}

}  // namespace gb
