#include <doctest.h>

#include <atomic>
#include <set>

#include "gb/csr.hpp"
#include "gb/mask.hpp"
#include "gb/registry.hpp"
#include "gb/rng.hpp"
#include "gb/traversal.hpp"
#include "test_support.hpp"

using namespace gb;

namespace {

std::set<VertexId> members(const VertexSubset& s) {
  std::set<VertexId> out;
  s.for_each([&](VertexId v) { out.insert(v); });
  return out;
}

}  // namespace

TEST_CASE("edge_map: bfs step on the fixture") {
  GraphData t4 = gbtest::t4();
  CsrGraph g = CsrGraph::build(t4.n, t4.arcs);
  GraphView view(g);

  std::vector<std::atomic<VertexId>> parent(4);
  for (auto& p : parent) p.store(kNoVertex);
  parent[0].store(0);

  auto update = [&](VertexId u, VertexId v) {
    parent[v].store(u);
    return true;
  };
  auto cond = [&](VertexId v) { return parent[v].load() == kNoVertex; };
  EdgeMapSpec spec{update, cond};

  VertexSubset frontier = VertexSubset::singleton(4, 0);
  VertexSubset next = edge_map(view, frontier, spec);
  CHECK(members(next) == std::set<VertexId>{1, 2});
}

TEST_CASE("edge_map: empty frontier and always-false cond") {
  GraphData t4 = gbtest::t4();
  CsrGraph g = CsrGraph::build(t4.n, t4.arcs);
  GraphView view(g);

  auto update = [&](VertexId, VertexId) { return true; };
  auto cond_true = [&](VertexId) { return true; };
  auto cond_false = [&](VertexId) { return false; };

  EdgeMapSpec spec1{update, cond_true};
  CHECK(edge_map(view, VertexSubset::empty(4), spec1).size() == 0);

  EdgeMapSpec spec2{update, cond_false};
  VertexSubset all(4, std::vector<VertexId>{0, 1, 2, 3});
  CHECK(edge_map(view, all, spec2).size() == 0);
}

TEST_CASE("edge_map_dense: pull step") {
  GraphData t4 = gbtest::t4();
  CsrGraph g = CsrGraph::build(t4.n, t4.arcs);
  GraphView view(g);

  auto update = [&](VertexId, VertexId) { return true; };
  auto cond = [&](VertexId v) { return v == 3; };
  EdgeMapSpec spec{update, cond};
  VertexSubset frontier(4, std::vector<VertexId>{1, 2});
  VertexSubset out = edge_map_dense(view, frontier, spec);
  CHECK(out.is_dense());
  CHECK(members(out) == std::set<VertexId>{3});
}

TEST_CASE("dense early exit stops the scan at the first frontier hit") {
  // star: 0 joined to 1..63, all in the frontier; scanning 0's ordered
  // neighbor list must stop on the first
  std::vector<Edge> edges;
  for (VertexId v = 1; v < 64; ++v) edges.push_back({0, v});
  GraphData g = gbtest::make_graph(64, edges);
  CsrGraph csr = CsrGraph::build(g.n, g.arcs);
  GraphView view(csr);

  std::atomic<uint64_t> scans{0};
  auto update = [&](VertexId, VertexId) { return true; };
  auto cond = [&](VertexId v) { return v == 0; };

  std::vector<VertexId> ids;
  for (VertexId v = 1; v < 64; ++v) ids.push_back(v);
  VertexSubset frontier(64, ids);

  EdgeMapSpec spec{update, cond};
  // count how many neighbors of 0 the engine actually inspects
  std::atomic<uint64_t> inspected{0};
  auto counting_update = [&](VertexId u, VertexId v) {
    (void)u;
    (void)v;
    inspected.fetch_add(1);
    return true;
  };
  EdgeMapSpec counting{counting_update, cond};
  counting.allow_dense_early_exit = true;
  edge_map_dense(view, frontier, counting);
  CHECK(inspected.load() == 1);

  counting.allow_dense_early_exit = false;
  inspected.store(0);
  edge_map_dense(view, frontier, counting);
  CHECK(inspected.load() == 63);
  (void)spec;
  (void)scans;
}

TEST_CASE("threshold controls the mode") {
  GraphData t4 = gbtest::t4();
  CsrGraph g = CsrGraph::build(t4.n, t4.arcs);
  GraphView view(g);

  auto update = [&](VertexId, VertexId) { return true; };
  auto cond = [&](VertexId) { return true; };
  VertexSubset frontier = VertexSubset::singleton(4, 3);

  EdgeMapMode mode;
  EdgeMapSpec spec{update, cond};
  spec.mode_out = &mode;

  spec.threshold_fraction = 0.0;
  edge_map(view, frontier, spec);
  CHECK(mode == EdgeMapMode::Dense);

  spec.threshold_fraction = 1.0;  // frontier work (1 + 1) <= m (8)
  edge_map(view, frontier, spec);
  CHECK(mode == EdgeMapMode::Sparse);
}

TEST_CASE("sparse mode invokes update at most once per destination") {
  // triangle fan: many frontier vertices all pointing at vertex 0
  std::vector<Edge> edges;
  for (VertexId v = 1; v < 32; ++v) edges.push_back({0, v});
  GraphData g = gbtest::make_graph(32, edges);
  CsrGraph csr = CsrGraph::build(g.n, g.arcs);
  GraphView view(csr);

  std::vector<std::atomic<uint64_t>> true_returns(32);
  for (auto& c : true_returns) c.store(0);
  auto update = [&](VertexId, VertexId v) {
    true_returns[v].fetch_add(1);
    return true;
  };
  auto cond = [&](VertexId) { return true; };
  std::vector<VertexId> ids;
  for (VertexId v = 1; v < 32; ++v) ids.push_back(v);
  VertexSubset frontier(32, ids);

  EdgeMapSpec spec{update, cond};
  VertexSubset out = edge_map_sparse(view, frontier, spec);
  CHECK(true_returns[0].load() == 1);
  CHECK(members(out).count(0) == 1);
}

TEST_CASE("sparse and dense modes agree on idempotent updates") {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    GraphData g = gbtest::random_graph(1000 + trial, 40 + rng.next_below(40),
                                       0.08);
    CsrGraph csr = CsrGraph::build(g.n, g.arcs);
    GraphView view(csr);

    std::vector<VertexId> ids;
    for (uint64_t v = 0; v < g.n; ++v)
      if (rng.next_below(3) == 0) ids.push_back(static_cast<VertexId>(v));
    VertexSubset frontier(g.n, ids);

    uint64_t salt = rng.next_u64();
    auto cond = [&](VertexId v) { return mix64(v ^ salt) % 4 != 0; };
    auto update = [&](VertexId, VertexId) { return true; };
    EdgeMapSpec spec{update, cond};

    VertexSubset sparse = edge_map_sparse(view, frontier, spec);
    VertexSubset dense = edge_map_dense(view, frontier, spec);
    CHECK(members(sparse) == members(dense));
  }
}

TEST_CASE("frontier membership is independent of thread count") {
  GraphData g = gbtest::random_graph(2025, 120, 0.06);
  CsrGraph csr = CsrGraph::build(g.n, g.arcs);
  GraphView view(csr);

  auto run_once = [&]() {
    std::vector<std::atomic<VertexId>> parent(g.n);
    for (auto& p : parent) p.store(kNoVertex);
    parent[0].store(0);
    auto update = [&](VertexId u, VertexId v) {
      parent[v].store(u);
      return true;
    };
    auto cond = [&](VertexId v) { return parent[v].load() == kNoVertex; };
    EdgeMapSpec spec{update, cond};
    std::vector<std::set<VertexId>> trace;
    VertexSubset frontier = VertexSubset::singleton(g.n, 0);
    while (frontier.size() > 0) {
      frontier = edge_map(view, frontier, spec);
      trace.push_back(members(frontier));
    }
    return trace;
  };

  int restore = num_workers();
  set_num_workers(1);
  auto serial = run_once();
  set_num_workers(2);
  auto parallel = run_once();
  set_num_workers(restore);
  CHECK(serial == parallel);
}

TEST_CASE("sparse mode with parallel inner maps on high-degree hubs") {
  // two hubs above the inner parallel grain, walked concurrently
  std::vector<Edge> edges;
  for (VertexId v = 2; v < 1502; ++v) edges.push_back({0, v});
  for (VertexId v = 1502; v < 3002; ++v) edges.push_back({1, v});
  GraphData g = gbtest::make_graph(3002, edges);
  CsrGraph csr = CsrGraph::build(g.n, g.arcs);
  GraphView view(csr);

  auto update = [&](VertexId, VertexId) { return true; };
  auto cond = [&](VertexId v) { return v >= 2; };
  EdgeMapSpec spec{update, cond};
  VertexSubset frontier(g.n, std::vector<VertexId>{0, 1});
  VertexSubset out = edge_map_sparse(view, frontier, spec);
  CHECK(out.size() == 3000);
  CHECK(out.ids().front() == 2);
  CHECK(out.ids().back() == 3001);
}

TEST_CASE("vertex_map and vertex_filter") {
  VertexSubset s(6, std::vector<VertexId>{0, 1, 2, 3});
  uint64_t visits = 0;
  vertex_map(s, [&](VertexId) { ++visits; });
  CHECK(visits == 4);

  VertexSubset evens = vertex_filter(s, [](VertexId v) { return v % 2 == 0; });
  CHECK(members(evens) == std::set<VertexId>{0, 2});

  VertexSubset empty = VertexSubset::empty(6);
  visits = 0;
  vertex_map(empty, [&](VertexId) { ++visits; });
  CHECK(visits == 0);

  VertexSubset same = vertex_filter(s, [](VertexId) { return true; });
  CHECK(members(same) == members(s));

  // dense input keeps its representation
  VertexSubset dense = s.to_dense();
  VertexSubset filtered = vertex_filter(dense, [](VertexId v) { return v < 2; });
  CHECK(filtered.is_dense());
  CHECK(members(filtered) == std::set<VertexId>{0, 1});
}
