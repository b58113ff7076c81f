#pragma once

#include "gb/batch.hpp"
#include "gb/graph_data.hpp"

namespace gb {

struct ErParams {
  uint64_t n = 0;
  double p = 0.0;
};

// G(n, p): each unordered pair independently with probability p, sampled
// by geometric gap skipping. Deterministic in the seed.
GraphData generate_er(const ErParams& params, uint64_t seed);

// Sample `arcs` directed arcs by recursive quadrant descent over a
// 2^log2_n square, then symmetrize and deduplicate.
GraphData generate_rmat(const RmatParams& params, uint64_t arcs,
                        uint64_t seed);

// The 4-vertex fixture used across the test suites: a triangle 0-1-2 with
// pendant vertex 3 hanging off 2.
GraphData tiny_fixture_graph();

}  // namespace gb
