#include "gb/generators.hpp"

#include <cmath>

#include "gb/rng.hpp"

namespace gb {

GraphData normalize_arcs(std::vector<Edge> raw, uint64_t min_n,
                         std::string name) {
  std::vector<Edge> arcs;
  arcs.reserve(raw.size() * 2);
  uint64_t max_id = 0;
  bool any = false;
  for (Edge e : raw) {
    max_id = std::max<uint64_t>(max_id, std::max(e.src, e.dst));
    any = true;
    if (e.src == e.dst) continue;
    arcs.push_back(e);
    arcs.push_back({e.dst, e.src});
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  GraphData g;
  g.n = std::max(min_n, any ? max_id + 1 : 0);
  g.arcs = std::move(arcs);
  g.name = std::move(name);
  return g;
}

GraphData generate_er(const ErParams& params, uint64_t seed) {
  if (params.p < 0.0 || params.p > 1.0)
    throw config_error("er: p must be in [0, 1]");
  std::vector<Edge> raw;
  uint64_t n = params.n;
  if (n >= 2 && params.p > 0.0) {
    Rng rng(seed);
    if (params.p >= 1.0) {
      for (uint64_t i = 0; i < n; ++i)
        for (uint64_t j = i + 1; j < n; ++j)
          raw.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
    } else {
      // geometric skips through the linearized strict upper triangle
      double log1mp = std::log1p(-params.p);
      uint64_t total = n * (n - 1) / 2;
      uint64_t pos = 0;
      uint64_t i = 0;
      uint64_t row_start = 0;  // linear index of pair (i, i+1)
      while (pos < total) {
        double u = rng.next_double();
        double dskip = std::floor(std::log1p(-u) / log1mp);
        if (dskip >= static_cast<double>(total - pos)) break;
        pos += static_cast<uint64_t>(dskip);
        while (pos >= row_start + (n - 1 - i)) {
          row_start += n - 1 - i;
          ++i;
        }
        uint64_t j = i + 1 + (pos - row_start);
        raw.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
        ++pos;
      }
    }
  }
  return normalize_arcs(std::move(raw), params.n);
}

GraphData generate_rmat(const RmatParams& params, uint64_t arcs,
                        uint64_t seed) {
  EdgeBatch batch = generate_update_batch(params, arcs, seed);
  return normalize_arcs(std::move(batch.updates),
                        uint64_t{1} << params.log2_n);
}

GraphData tiny_fixture_graph() {
  GraphData g = normalize_arcs(
      {{0, 1}, {1, 2}, {0, 2}, {2, 3}}, 4, "t4");
  return g;
}

}  // namespace gb
