#include <doctest.h>

#include <cmath>
#include <numeric>

#include "gb/algorithms.hpp"
#include "gb/buckets.hpp"
#include "gb/checks.hpp"
#include "gb/csr.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace gb;

namespace {

CsrGraph build(const GraphData& g) { return CsrGraph::build(g.n, g.arcs); }

}  // namespace

TEST_CASE("bfs on the fixture") {
  GraphData t4 = gbtest::t4();
  CsrGraph g = build(t4);
  GraphView view(g);
  BfsResult r = bfs(view, 0);
  CHECK(r.distances == std::vector<uint64_t>{0, 1, 1, 2});
  // parent tree: parent distance = child distance - 1
  for (uint64_t v = 0; v < 4; ++v) {
    if (v == 0) continue;
    CHECK(r.distances[r.parents[v]] == r.distances[v] - 1);
  }
  CHECK_THROWS_AS(bfs(view, 9), std::out_of_range);
}

TEST_CASE("bfs from an isolated vertex") {
  GraphData g = gbtest::make_graph(4, {{0, 1}});
  CsrGraph csr = build(g);
  GraphView view(csr);
  BfsResult r = bfs(view, 3);
  CHECK(r.distances[3] == 0);
  CHECK(r.distances[0] == kInfiniteDistance);
  CHECK(r.distances[1] == kInfiniteDistance);
  CHECK(r.distances[2] == kInfiniteDistance);
}

TEST_CASE("bfs matches the oracle on seeded graphs") {
  for (int trial = 0; trial < 20; ++trial) {
    GraphData g = gbtest::random_graph(100 + trial, 150, 0.03);
    CsrGraph csr = build(g);
    GraphView view(csr);
    CHECK(bfs(view, trial % 150).distances ==
          gbtest::oracle_bfs(g, trial % 150));
  }
}

TEST_CASE("bc on the fixture from the pendant") {
  GraphData t4 = gbtest::t4();
  CsrGraph g = build(t4);
  GraphView view(g);
  std::vector<double> delta = bc(view, 3);
  CHECK(delta[2] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(delta[0] == doctest::Approx(0.0));
  CHECK(delta[1] == doctest::Approx(0.0));
}

TEST_CASE("bc: star center leaves cover nobody") {
  std::vector<Edge> edges;
  for (VertexId v = 1; v < 8; ++v) edges.push_back({0, v});
  GraphData g = gbtest::make_graph(8, edges);
  CsrGraph csr = build(g);
  GraphView view(csr);
  std::vector<double> delta = bc(view, 0);
  for (VertexId v = 1; v < 8; ++v) CHECK(delta[v] == doctest::Approx(0.0));
}

TEST_CASE("bc matches serial Brandes on seeded graphs") {
  for (int trial = 0; trial < 20; ++trial) {
    GraphData g = gbtest::random_graph(300 + trial, 64, 0.08);
    CsrGraph csr = build(g);
    GraphView view(csr);
    VertexId source = static_cast<VertexId>(trial % 64);
    std::vector<double> got = bc(view, source);
    std::vector<double> expect = gbtest::oracle_bc(g, source);
    REQUIRE(got.size() == expect.size());
    for (size_t v = 0; v < got.size(); ++v)
      CHECK(std::abs(got[v] - expect[v]) < 1e-9);
  }
}

TEST_CASE("ldd produces a connected partition") {
  for (int trial = 0; trial < 25; ++trial) {
    GraphData g = gbtest::random_graph(500 + trial, 120, 0.04);
    CsrGraph csr = build(g);
    GraphView view(csr);
    double beta = trial % 2 ? 1.0 : 0.2;
    LddResult r = ldd(view, beta, trial);
    CHECK_FALSE(check_ldd(g, r.labels).has_value());
  }
  GraphData t4 = gbtest::t4();
  CsrGraph csr = build(t4);
  GraphView view(csr);
  CHECK_THROWS_AS(ldd(view, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(ldd(view, 1.5, 1), std::invalid_argument);
}

TEST_CASE("ldd radius stays within the engineering gate") {
  for (int trial = 0; trial < 10; ++trial) {
    GraphData g = gbtest::random_graph(700 + trial, 150, 0.04);
    CsrGraph csr = build(g);
    GraphView view(csr);
    double beta = 0.4;
    LddResult r = ldd(view, beta, trial);
    double limit = 4.0 * std::log(static_cast<double>(g.n)) / beta;
    // radius from the center inside each cluster, via the join rounds
    auto dist = gbtest::oracle_apsp(g);
    for (uint64_t v = 0; v < g.n; ++v) {
      double radius = static_cast<double>(dist[r.labels[v]][v]);
      CHECK(radius <= limit);
    }
  }
}

TEST_CASE("cc on fixtures") {
  GraphData t4 = gbtest::t4();
  CsrGraph csr = build(t4);
  GraphView view(csr);
  CHECK(cc(view) == std::vector<VertexId>{0, 0, 0, 0});

  GraphData edgeless = gbtest::make_graph(5, {});
  CsrGraph e = build(edgeless);
  GraphView ev(e);
  CHECK(cc(ev) == std::vector<VertexId>{0, 1, 2, 3, 4});
}

TEST_CASE("cc matches flood fill on seeded graphs") {
  for (int trial = 0; trial < 25; ++trial) {
    GraphData g = gbtest::random_graph(900 + trial, 200, 0.008);
    CsrGraph csr = build(g);
    GraphView view(csr);
    CHECK(cc(view) == gbtest::oracle_components(g));
  }
}

TEST_CASE("spanner preserves connectivity") {
  for (int trial = 0; trial < 15; ++trial) {
    GraphData g = gbtest::random_graph(1100 + trial, 64, 0.08);
    CsrGraph csr = build(g);
    GraphView view(csr);
    uint64_t k = 1 + trial % 3;
    std::vector<Edge> arcs = spanner(view, k, trial);
    CHECK_FALSE(check_spanner(g, arcs).has_value());
  }
}

TEST_CASE("spanner on the fixture with k=1 connects everything") {
  GraphData t4 = gbtest::t4();
  CsrGraph csr = build(t4);
  GraphView view(csr);
  std::vector<Edge> arcs = spanner(view, 1, 42);
  CHECK_FALSE(check_spanner(t4, arcs).has_value());
  GraphData sub;
  sub.n = 4;
  sub.arcs = arcs;
  auto comp = gbtest::oracle_components(sub);
  CHECK(comp == std::vector<VertexId>{0, 0, 0, 0});
}

TEST_CASE("spanner stretch stays within 8k on small graphs") {
  for (int trial = 0; trial < 8; ++trial) {
    GraphData g = gbtest::random_graph(1300 + trial, 48, 0.12);
    CsrGraph csr = build(g);
    GraphView view(csr);
    for (uint64_t k : {uint64_t{1}, uint64_t{2}, uint64_t{3}}) {
      std::vector<Edge> arcs = spanner(view, k, trial);
      GraphData sub;
      sub.n = g.n;
      sub.arcs = arcs;
      auto dist = gbtest::oracle_apsp(sub);
      for (const Edge& e : g.arcs) {
        if (e.src >= e.dst) continue;
        CHECK(dist[e.src][e.dst] <= 8 * k);
      }
    }
  }
}

TEST_CASE("ads on fixtures") {
  GraphData t4 = gbtest::t4();
  CsrGraph csr = build(t4);
  GraphView view(csr);
  AdsResult r = ads(view, 0.001);
  CHECK(r.members == std::vector<VertexId>{0, 1, 2});
  CHECK(r.density == doctest::Approx(1.0));

  // clique: the whole graph is densest
  std::vector<Edge> k5;
  for (VertexId u = 0; u < 5; ++u)
    for (VertexId v = u + 1; v < 5; ++v) k5.push_back({u, v});
  GraphData clique = gbtest::make_graph(5, k5);
  CsrGraph c = build(clique);
  GraphView cv(c);
  AdsResult rc = ads(cv, 0.001);
  CHECK(rc.members.size() == 5);
  CHECK(rc.density == doctest::Approx(2.0));

  GraphData empty = gbtest::make_graph(0, {});
  CsrGraph e = build(empty);
  GraphView ev(e);
  AdsResult re = ads(ev, 0.5);
  CHECK(re.members.empty());
  CHECK(re.density == 0.0);
}

TEST_CASE("ads meets the approximation bound on exhaustive instances") {
  double eps = 0.001;
  for (int trial = 0; trial < 30; ++trial) {
    uint64_t n = 4 + trial % 11;  // up to 14
    GraphData g = gbtest::random_graph(1500 + trial, n, 0.35);
    CsrGraph csr = build(g);
    GraphView view(csr);
    AdsResult r = ads(view, eps);
    double optimal = gbtest::oracle_densest_subgraph(g);
    CHECK(r.density >= optimal / (2.0 * (1.0 + eps)) - 1e-12);
    CHECK_FALSE(check_ads(g, r).has_value());
  }
}

TEST_CASE("kcore on fixtures") {
  GraphData t4 = gbtest::t4();
  CsrGraph csr = build(t4);
  GraphView view(csr);
  CHECK(kcore(view) == std::vector<uint64_t>{2, 2, 2, 1});

  // a tree has coreness 1 everywhere
  GraphData tree = gbtest::make_graph(
      7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
  CsrGraph t = build(tree);
  GraphView tv(t);
  CHECK(kcore(tv) ==
        std::vector<uint64_t>{1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("kcore matches serial peeling on seeded graphs") {
  for (int trial = 0; trial < 15; ++trial) {
    GraphData g = gbtest::random_graph(1700 + trial, 200, 0.03);
    CsrGraph csr = build(g);
    GraphView view(csr);
    CHECK(kcore(view) == gbtest::oracle_kcore(g));
  }
}

TEST_CASE("coloring is proper and within the greedy bound") {
  GraphData edgeless = gbtest::make_graph(5, {});
  CsrGraph e = build(edgeless);
  GraphView ev(e);
  CHECK(coloring(ev) == std::vector<uint32_t>{0, 0, 0, 0, 0});

  for (int trial = 0; trial < 20; ++trial) {
    GraphData g = gbtest::random_graph(1900 + trial, 120, 0.06);
    CsrGraph csr = build(g);
    GraphView view(csr);
    CHECK_FALSE(check_coloring(g, coloring(view)).has_value());
  }
}

TEST_CASE("mis is independent and maximal") {
  GraphData t4 = gbtest::t4();
  CsrGraph csr = build(t4);
  GraphView view(csr);
  std::vector<uint8_t> flags = mis(view, 3);
  CHECK_FALSE(check_mis(t4, flags).has_value());
  // every MIS of the fixture is either {2} alone or {3, one triangle vertex}
  int size = std::accumulate(flags.begin(), flags.end(), 0);
  if (flags[2]) {
    CHECK(size == 1);
  } else {
    CHECK(size == 2);
    CHECK(flags[3] == 1);
  }

  GraphData edgeless = gbtest::make_graph(4, {});
  CsrGraph e = build(edgeless);
  GraphView ev(e);
  CHECK(mis(ev, 1) == std::vector<uint8_t>{1, 1, 1, 1});

  for (int trial = 0; trial < 50; ++trial) {
    GraphData g = gbtest::random_graph(2100 + trial, 150, 0.05);
    CsrGraph rc = build(g);
    GraphView rv(rc);
    CHECK_FALSE(check_mis(g, mis(rv, trial)).has_value());
  }
}

TEST_CASE("pagerank on fixtures") {
  // 4-cycle: regular, so the scores are exactly uniform
  GraphData c4 = gbtest::make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CsrGraph c = build(c4);
  GraphView cv(c);
  std::vector<double> p = pagerank(cv, 0.85, 20, 1e-4);
  for (double x : p) CHECK(x == doctest::Approx(0.25).epsilon(1e-12));

  GraphData t4 = gbtest::t4();
  CsrGraph t = build(t4);
  GraphView tv(t);
  std::vector<double> q = pagerank(tv, 0.85, 20, 1e-4);
  CHECK(q[2] > q[0]);
  CHECK(q[2] > q[1]);
  CHECK(q[2] > q[3]);
  double total = std::accumulate(q.begin(), q.end(), 0.0);
  CHECK(std::abs(total - 1.0) < 1e-6);

  CHECK_THROWS_AS(pagerank(tv, 1.5, 20, 1e-4), std::invalid_argument);
  CHECK_THROWS_AS(pagerank(tv, 0.85, 20, 0.0), std::invalid_argument);
}

TEST_CASE("pagerank matches the reference iteration") {
  for (int trial = 0; trial < 15; ++trial) {
    GraphData g = gbtest::random_graph(2300 + trial, 150, 0.04);
    CsrGraph csr = build(g);
    GraphView view(csr);
    std::vector<double> got = pagerank(view, 0.85, 20, 1e-4);
    std::vector<double> expect = gbtest::oracle_pagerank(g, 0.85, 20, 1e-4);
    double l1 = 0.0;
    for (size_t v = 0; v < got.size(); ++v) l1 += std::abs(got[v] - expect[v]);
    CHECK(l1 < 1e-7);
  }
}

TEST_CASE("buckets emit in nondecreasing priority order") {
  Buckets b(std::vector<uint64_t>{1, 1, 2});
  auto first = b.next_bucket();
  REQUIRE(first.has_value());
  CHECK(first->priority == 1);
  CHECK(first->vertices == std::vector<VertexId>{0, 1});
  auto second = b.next_bucket();
  REQUIRE(second.has_value());
  CHECK(second->priority == 2);
  CHECK(second->vertices == std::vector<VertexId>{2});
  CHECK_FALSE(b.next_bucket().has_value());
}

TEST_CASE("buckets: raised priorities reappear exactly once") {
  Buckets b(std::vector<uint64_t>{1, 1, 2});
  b.update(2, 5);
  auto first = b.next_bucket();
  REQUIRE(first.has_value());
  CHECK(first->vertices == std::vector<VertexId>{0, 1});
  auto second = b.next_bucket();
  REQUIRE(second.has_value());
  CHECK(second->priority == 5);
  CHECK(second->vertices == std::vector<VertexId>{2});
  CHECK_FALSE(b.next_bucket().has_value());
}

TEST_CASE("buckets: empty and monotonicity violations") {
  Buckets empty(std::vector<uint64_t>{});
  CHECK_FALSE(empty.next_bucket().has_value());

  Buckets b(std::vector<uint64_t>{3, 5});
  auto first = b.next_bucket();
  REQUIRE(first.has_value());
  CHECK(first->priority == 3);
  CHECK_THROWS_AS(b.update(1, 2), std::logic_error);

  // lowering above the cursor is allowed (peeling moves priorities down
  // to the current level, never below it)
  b.update(1, 4);
  auto second = b.next_bucket();
  REQUIRE(second.has_value());
  CHECK(second->priority == 4);
  CHECK(second->vertices == std::vector<VertexId>{1});

  Buckets never(std::vector<uint64_t>{Buckets::kNever, 1});
  auto only = never.next_bucket();
  REQUIRE(only.has_value());
  CHECK(only->vertices == std::vector<VertexId>{1});
  CHECK_FALSE(never.next_bucket().has_value());
}
