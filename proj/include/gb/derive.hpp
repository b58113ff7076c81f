#pragma once

#include <algorithm>
#include <vector>

#include "gb/csr.hpp"
#include "gb/facade.hpp"
#include "gb/function_ref.hpp"

namespace gb {

// Neighborhood primitives built from the map primitive alone. Reduce
// needs a commutative, associative combine with the given identity,
// because visit order is whatever the container produces.

template <class T, class MapFn, class CombineFn>
T derive_reduce(const GraphView& g, VertexId i, MapFn&& map_fn,
                CombineFn&& combine, T identity) {
  T value = identity;
  g.map_neighbors(i, [&](VertexId v) { value = combine(value, map_fn(v)); });
  return value;
}

template <class Pred>
uint64_t derive_count(const GraphView& g, VertexId i, Pred&& pred) {
  uint64_t count = 0;
  g.map_neighbors(i, [&](VertexId v) { count += pred(v) ? 1 : 0; });
  return count;
}

inline uint64_t derive_degree(const GraphView& g, VertexId i) {
  uint64_t count = 0;
  g.map_neighbors(i, [&](VertexId) { ++count; });
  return count;
}

inline std::vector<VertexId> derive_get_neighbors(const GraphView& g,
                                                  VertexId i) {
  std::vector<VertexId> out;
  g.map_neighbors(i, [&](VertexId v) { out.push_back(v); });
  std::sort(out.begin(), out.end());
  return out;
}

// Out-of-place filter: materializes the arcs (u,v) with pred(u,v) into a
// fresh static CSR snapshot; the source container is untouched. Used to
// re-orient a graph before read-only phases that want a slimmer arc set.
template <class Pred>
CsrGraph derive_filter(const GraphView& g, Pred&& pred) {
  uint64_t n = g.num_vertices();
  std::vector<Edge> arcs;
  for (VertexId u = 0; u < n; ++u) {
    std::vector<VertexId> kept;
    g.map_neighbors(u, [&](VertexId v) {
      if (pred(u, v)) kept.push_back(v);
    });
    std::sort(kept.begin(), kept.end());
    for (VertexId v : kept) arcs.push_back({u, v});
  }
  return CsrGraph::build(n, arcs);
}

}  // namespace gb
