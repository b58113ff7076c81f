#include "gb/checks.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace gb {

namespace {

std::vector<std::vector<VertexId>> adjacency(const GraphData& g) {
  std::vector<std::vector<VertexId>> adj(g.n);
  for (const Edge& e : g.arcs) adj[e.src].push_back(e.dst);
  return adj;
}

// Flood-fill component labels (minimum id per component).
std::vector<VertexId> reference_components(
    uint64_t n, const std::vector<std::vector<VertexId>>& adj) {
  std::vector<VertexId> comp(n, kNoVertex);
  std::vector<VertexId> stack;
  for (uint64_t s = 0; s < n; ++s) {
    if (comp[s] != kNoVertex) continue;
    comp[s] = static_cast<VertexId>(s);
    stack.push_back(static_cast<VertexId>(s));
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId v : adj[u]) {
        if (comp[v] == kNoVertex) {
          comp[v] = static_cast<VertexId>(s);
          stack.push_back(v);
        }
      }
    }
  }
  return comp;
}

}  // namespace

std::optional<std::string> check_coloring(
    const GraphData& g, const std::vector<uint32_t>& colors) {
  if (colors.size() != g.n) return "coloring: wrong output length";
  uint64_t max_degree = 0;
  std::vector<uint64_t> deg(g.n, 0);
  for (const Edge& e : g.arcs) ++deg[e.src];
  for (uint64_t v = 0; v < g.n; ++v) max_degree = std::max(max_degree, deg[v]);
  for (const Edge& e : g.arcs)
    if (colors[e.src] == colors[e.dst])
      return "coloring: arc " + std::to_string(e.src) + "-" +
             std::to_string(e.dst) + " is monochromatic";
  for (uint64_t v = 0; v < g.n; ++v)
    if (colors[v] > max_degree)
      return "coloring: color exceeds max degree bound at vertex " +
             std::to_string(v);
  return std::nullopt;
}

std::optional<std::string> check_mis(const GraphData& g,
                                     const std::vector<uint8_t>& in_set) {
  if (in_set.size() != g.n) return "mis: wrong output length";
  for (const Edge& e : g.arcs)
    if (in_set[e.src] && in_set[e.dst])
      return "mis: adjacent vertices " + std::to_string(e.src) + "," +
             std::to_string(e.dst) + " both selected";
  auto adj = adjacency(g);
  for (uint64_t v = 0; v < g.n; ++v) {
    if (in_set[v]) continue;
    bool covered = false;
    for (VertexId u : adj[v])
      if (in_set[u]) {
        covered = true;
        break;
      }
    if (!covered)
      return "mis: vertex " + std::to_string(v) +
             " could be added (not maximal)";
  }
  return std::nullopt;
}

std::optional<std::string> check_ldd(const GraphData& g,
                                     const std::vector<VertexId>& labels) {
  if (labels.size() != g.n) return "ldd: wrong output length";
  for (uint64_t v = 0; v < g.n; ++v) {
    if (labels[v] >= g.n) return "ldd: unlabeled vertex " + std::to_string(v);
    if (labels[labels[v]] != labels[v])
      return "ldd: center " + std::to_string(labels[v]) +
             " not in its own cluster";
  }
  // clusters must be connected: grow each cluster from its center using
  // only same-cluster arcs
  auto adj = adjacency(g);
  std::vector<char> reached(g.n, 0);
  std::vector<VertexId> stack;
  for (uint64_t c = 0; c < g.n; ++c) {
    if (labels[c] != c) continue;
    stack.push_back(static_cast<VertexId>(c));
    reached[c] = 1;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId v : adj[u])
        if (!reached[v] && labels[v] == labels[u]) {
          reached[v] = 1;
          stack.push_back(v);
        }
    }
  }
  for (uint64_t v = 0; v < g.n; ++v)
    if (!reached[v])
      return "ldd: vertex " + std::to_string(v) +
             " disconnected from its center";
  return std::nullopt;
}

std::optional<std::string> check_spanner(const GraphData& g,
                                         const std::vector<Edge>& arcs) {
  for (const Edge& e : arcs) {
    if (e.src >= g.n || e.dst >= g.n) return "spanner: arc out of range";
    if (!std::binary_search(g.arcs.begin(), g.arcs.end(), e))
      return "spanner: arc " + std::to_string(e.src) + "-" +
             std::to_string(e.dst) + " not in the input graph";
  }
  auto base = reference_components(g.n, adjacency(g));
  GraphData sub;
  sub.n = g.n;
  sub.arcs = arcs;
  auto sparse = reference_components(g.n, adjacency(sub));
  for (uint64_t u = 0; u < g.n; ++u)
    if (base[u] != sparse[u])
      return "spanner: connectivity not preserved at vertex " +
             std::to_string(u);
  return std::nullopt;
}

std::optional<std::string> check_ads(const GraphData& g,
                                     const AdsResult& result) {
  if (g.n == 0) {
    if (!result.members.empty() || result.density != 0.0)
      return "ads: nonempty answer on the empty graph";
    return std::nullopt;
  }
  if (result.members.empty()) return "ads: empty subgraph returned";
  std::vector<char> in(g.n, 0);
  for (VertexId v : result.members) {
    if (v >= g.n) return "ads: member out of range";
    in[v] = 1;
  }
  uint64_t arcs_inside = 0;
  for (const Edge& e : g.arcs)
    if (in[e.src] && in[e.dst]) ++arcs_inside;
  double density = static_cast<double>(arcs_inside / 2) /
                   static_cast<double>(result.members.size());
  if (std::abs(density - result.density) > 1e-12)
    return "ads: reported density " + std::to_string(result.density) +
           " != recomputed " + std::to_string(density);
  return std::nullopt;
}

std::optional<std::string> check_cc(const GraphData& g,
                                    const std::vector<VertexId>& labels) {
  if (labels.size() != g.n) return "cc: wrong output length";
  auto ref = reference_components(g.n, adjacency(g));
  for (uint64_t v = 0; v < g.n; ++v)
    if (labels[v] != ref[v])
      return "cc: label mismatch at vertex " + std::to_string(v);
  return std::nullopt;
}

}  // namespace gb
