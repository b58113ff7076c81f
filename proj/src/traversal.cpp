#include "gb/traversal.hpp"

#include <algorithm>


#include "gb/parallel.hpp"

namespace gb {

namespace {

constexpr uint64_t kParallelDegreeGrain = 1024;

}  // namespace

VertexSubset edge_map_sparse(const GraphView& g, const VertexSubset& frontier,
                             const EdgeMapSpec& spec) {
  uint64_t n = g.num_vertices();
  const VertexSubset sparse =
      frontier.is_dense() ? frontier.to_sparse() : frontier;

  AtomicBitset claimed(n);
  size_t buckets = static_cast<size_t>(num_workers());
  std::vector<std::vector<VertexId>> out(buckets);

  const auto& ids = sparse.ids();
  bool can_parallel_inner = g.caps().has_parallel_map && g.caps().has_degree;
  parallel_for(0, ids.size(), [&](size_t k) {
    VertexId u = ids[k];
    auto visit = [&](VertexId v) {
      if (!spec.cond(v)) return;
      if (!claimed.try_claim(v)) return;
      if (spec.update(u, v))
        out[static_cast<size_t>(worker_id())].push_back(v);
    };
    if (can_parallel_inner && g.degree(u) > kParallelDegreeGrain) {
      g.parallel_map_neighbors(u, visit);
    } else {
      g.map_neighbors(u, visit);
    }
  }, 1);

  std::vector<VertexId> merged;
  for (auto& b : out) merged.insert(merged.end(), b.begin(), b.end());
  return VertexSubset(n, std::move(merged));
}

VertexSubset edge_map_dense(const GraphView& g, const VertexSubset& frontier,
                            const EdgeMapSpec& spec) {
  uint64_t n = g.num_vertices();
  const VertexSubset dense =
      frontier.is_dense() ? frontier : frontier.to_dense();
  const auto& in_words = dense.words();
  auto in_frontier = [&](VertexId u) -> bool {
    return (in_words[u >> 6] >> (u & 63)) & 1;
  };

  size_t num_words = (n + 63) / 64;
  std::vector<uint64_t> out_words(num_words, 0);
  bool use_early_exit = spec.allow_dense_early_exit;

  // one word of destinations per task, so out_words needs no atomics;
  // per-vertex scans stay sequential to keep accumulating updates
  // deterministic at any thread count
  parallel_for(0, num_words, [&](size_t w) {
    uint64_t word = 0;
    VertexId lo = static_cast<VertexId>(w * 64);
    VertexId hi = static_cast<VertexId>(std::min<uint64_t>(n, w * 64 + 64));
    for (VertexId v = lo; v < hi; ++v) {
      if (!spec.cond(v)) continue;
      bool emitted = false;
      if (use_early_exit) {
        g.map_neighbors_early_exit(v, [&](VertexId u) {
          if (in_frontier(u)) {
            if (spec.update(u, v)) {
              emitted = true;
              return true;
            }
          }
          return !spec.cond(v);
        });
      } else {
        g.map_neighbors(v, [&](VertexId u) {
          if (in_frontier(u) && spec.cond(v)) {
            if (spec.update(u, v)) emitted = true;
          }
        });
      }
      if (emitted) word |= uint64_t{1} << (v & 63);
    }
    if (word) out_words[w] = word;
  }, 4);

  return VertexSubset(n, std::move(out_words), VertexSubset::Repr::Dense);
}

FrontierWork frontier_work(const GraphView& g, const VertexSubset& frontier) {
  return {frontier.size(), g.out_degree_sum(frontier)};
}

VertexSubset edge_map(const GraphView& g, const VertexSubset& frontier,
                      const EdgeMapSpec& spec) {
  uint64_t m = g.num_edges();
  FrontierWork work = frontier_work(g, frontier);
  bool dense = static_cast<double>(work.total()) >
               spec.threshold_fraction * static_cast<double>(m);
  if (spec.mode_out)
    *spec.mode_out = dense ? EdgeMapMode::Dense : EdgeMapMode::Sparse;
  return dense ? edge_map_dense(g, frontier, spec)
               : edge_map_sparse(g, frontier, spec);
}

void vertex_map(const VertexSubset& s, function_ref<void(VertexId)> f) {
  s.for_each([&](VertexId v) { f(v); });
}

VertexSubset vertex_filter(const VertexSubset& s,
                           function_ref<bool(VertexId)> pred) {
  uint64_t n = s.universe_size();
  if (s.is_dense()) {
    std::vector<uint64_t> words((n + 63) / 64, 0);
    s.for_each([&](VertexId v) {
      if (pred(v)) words[v >> 6] |= uint64_t{1} << (v & 63);
    });
    return VertexSubset(n, std::move(words), VertexSubset::Repr::Dense);
  }
  std::vector<VertexId> kept;
  s.for_each([&](VertexId v) {
    if (pred(v)) kept.push_back(v);
  });
  return VertexSubset(n, std::move(kept));
}

}  // namespace gb
