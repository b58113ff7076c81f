#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "gb/types.hpp"

namespace gb {

// Canonical in-memory graph: symmetric, self-loop-free, sorted arc list.
// The common currency between loaders, generators, and container builders.
struct GraphData {
  uint64_t n = 0;
  std::vector<Edge> arcs;  // sorted by (src, dst), deduplicated
  std::string name;

  GraphStats stats() const { return {n, arcs.size()}; }
};

// Normalizes an arbitrary arc list: drops self-loops, adds reverse arcs,
// sorts, deduplicates. n is max(min_n, 1 + max id) (0 when empty and
// min_n is 0).
GraphData normalize_arcs(std::vector<Edge> raw, uint64_t min_n = 0,
                         std::string name = "");

}  // namespace gb
