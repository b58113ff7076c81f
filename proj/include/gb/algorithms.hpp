#pragma once

#include <cstdint>
#include <vector>

#include "gb/facade.hpp"
#include "gb/types.hpp"

namespace gb {

struct AlgoParams {
  VertexId source = 0;      // bfs, bc
  uint64_t k = 2;           // spanner stretch parameter
  double beta = 0.2;        // ldd
  double epsilon = 0.001;   // ads
  double damping = 0.85;    // pagerank
  uint64_t max_iters = 20;  // pagerank
  double tolerance = 1e-4;  // pagerank
  uint64_t seed = 1;        // ldd, spanner, mis
};

struct BfsResult {
  std::vector<uint64_t> distances;  // kInfiniteDistance for unreached
  std::vector<VertexId> parents;    // kNoVertex for unreached; self at source
};

// Exact hop distances plus a parent tree (parent distance = child - 1).
BfsResult bfs(const GraphView& g, VertexId source);

// Single-source Brandes dependencies over the unweighted shortest-path DAG.
std::vector<double> bc(const GraphView& g, VertexId source);

struct LddResult {
  std::vector<VertexId> labels;   // cluster center per vertex
  std::vector<VertexId> parents;  // ball-growing tree edge; self at centers
  std::vector<uint64_t> rounds;   // round each vertex joined its cluster
};

// Randomized low-diameter clustering: per-vertex start shifts drawn from
// Exponential(beta), synchronous ball growing, ties to the lowest center.
LddResult ldd(const GraphView& g, double beta, uint64_t seed);

// Connected components; the label of a component is its minimum vertex id.
std::vector<VertexId> cc(const GraphView& g);

// Sparse connectivity-preserving subgraph: cluster trees from ldd with
// beta = ln(n)/k plus one connecting arc per adjacent cluster pair.
// Returned arcs are symmetric, sorted, deduplicated.
std::vector<Edge> spanner(const GraphView& g, uint64_t k, uint64_t seed);

struct AdsResult {
  std::vector<VertexId> members;  // sorted
  double density = 0.0;           // undirected edges / vertices
};

// Density peeling: drop vertices below (1+epsilon) times the current
// density each round (minimum-degree vertices when no one qualifies, so
// the loop always makes progress) and keep the densest prefix seen.
AdsResult ads(const GraphView& g, double epsilon);

// Coreness per vertex via bucketed peeling on remaining degree.
std::vector<uint64_t> kcore(const GraphView& g);

// Greedy coloring in largest-log-degree-first order (ties to lower id);
// each vertex takes the smallest color unused by its higher-priority
// neighbors.
std::vector<uint32_t> coloring(const GraphView& g);

// Maximal independent set with seeded random priorities; deterministic in
// the seed (lexicographically first MIS under the priority order).
std::vector<uint8_t> mis(const GraphView& g, uint64_t seed);

// Power iteration with uniform redistribution of dangling mass; stops at
// max_iters or when the L1 step difference drops below tolerance.
std::vector<double> pagerank(const GraphView& g, double damping,
                             uint64_t max_iters, double tolerance);

}  // namespace gb
