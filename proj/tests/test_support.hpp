#pragma once

#include <vector>

#include "gb/generators.hpp"
#include "gb/graph_data.hpp"
#include "gb/rng.hpp"

namespace gbtest {

// Undirected edge list -> canonical graph.
inline gb::GraphData make_graph(uint64_t n,
                                std::vector<gb::Edge> undirected_edges) {
  return gb::normalize_arcs(std::move(undirected_edges), n, "test");
}

inline gb::GraphData t4() { return gb::tiny_fixture_graph(); }

inline gb::GraphData random_graph(uint64_t seed, uint64_t n, double p) {
  gb::ErParams params{n, p};
  gb::GraphData g = gb::generate_er(params, seed);
  g.name = "er-test";
  return g;
}

}  // namespace gbtest
