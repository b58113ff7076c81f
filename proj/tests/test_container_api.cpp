#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "gb/algorithms.hpp"
#include "gb/csr.hpp"
#include "gb/derive.hpp"
#include "gb/facade.hpp"
#include "gb/mask.hpp"
#include "gb/metadata.hpp"
#include "gb/rng.hpp"
#include "gb/set_graph.hpp"
#include "test_support.hpp"

using namespace gb;

namespace {

// T4 as four pre-built sets.
template <class Set>
SetGraph<Set> t4_adapter(size_t inline_k) {
  std::vector<Set> sets(4);
  auto add = [&](VertexId u, std::initializer_list<VertexId> vs) {
    for (VertexId v : vs) sets[u].insert(v);
  };
  add(0, {1, 2});
  add(1, {0, 2});
  add(2, {0, 1, 3});
  add(3, {2});
  return SetGraph<Set>(std::move(sets), inline_k);
}

// Counts direct calls into each optional operation.
class CountingGraph final : public GraphContainer {
 public:
  explicit CountingGraph(const GraphContainer& inner) : inner_(inner) {}

  uint64_t num_vertices() const override { return inner_.num_vertices(); }
  void map_neighbors(VertexId i, NeighborFn f) const override {
    ++map_calls;
    inner_.map_neighbors(i, f);
  }
  Capabilities capabilities() const override { return inner_.capabilities(); }
  uint64_t num_edges() const override {
    ++num_edges_calls;
    return inner_.num_edges();
  }
  uint64_t degree(VertexId i) const override {
    ++degree_calls;
    return inner_.degree(i);
  }
  void map_neighbors_early_exit(VertexId i, NeighborStopFn f) const override {
    ++early_exit_calls;
    inner_.map_neighbors_early_exit(i, f);
  }

  mutable uint64_t map_calls = 0;
  mutable uint64_t degree_calls = 0;
  mutable uint64_t num_edges_calls = 0;
  mutable uint64_t early_exit_calls = 0;

 private:
  const GraphContainer& inner_;
};

// A set without size(), to exercise the metadata fallback in the adapter.
class NoSizeSet {
 public:
  static constexpr bool kOrdered = true;
  static constexpr bool kParallelMap = false;
  static constexpr bool kParallelEarlyExit = false;
  static constexpr bool kNativeBatch = false;
  static constexpr BatchForm kPreferredForm = BatchForm::SemiSortLocalSort;

  bool insert(VertexId x) { return inner_.insert(x); }
  bool erase(VertexId x) { return inner_.erase(x); }
  bool contains(VertexId x) const { return inner_.contains(x); }
  template <class F>
  void map(F&& f) const {
    inner_.map(f);
  }
  template <class F>
  bool map_early_exit(F&& f) const {
    return inner_.map_early_exit(f);
  }
  uint64_t memory_bytes() const { return inner_.memory_bytes(); }

 private:
  SortedVectorSet inner_;
};
static_assert(!set_has_size<NoSizeSet>);
static_assert(set_has_size<SortedVectorSet>);

}  // namespace

TEST_CASE("adapter lifts sets into the whole-graph contract") {
  auto g = t4_adapter<SortedVectorSet>(0);
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 8);
  CHECK(g.degree(2) == 3);

  // inline optimization on: identical observable behavior
  auto gi = t4_adapter<SortedVectorSet>(10);
  CHECK(gi.num_vertices() == 4);
  CHECK(gi.num_edges() == 8);
  for (VertexId v = 0; v < 4; ++v) {
    CHECK(gi.degree(v) == g.degree(v));
    GraphView a(g), b(gi);
    CHECK(derive_get_neighbors(a, v) == derive_get_neighbors(b, v));
  }

  SetGraph<SortedVectorSet> empty(std::vector<SortedVectorSet>{}, 0);
  CHECK(empty.num_vertices() == 0);
  CHECK(empty.num_edges() == 0);
}

TEST_CASE("adapter serves degree from metadata when the set has no size") {
  SetGraph<NoSizeSet> g(4, 0);
  g.insert_edge({0, 1});
  g.insert_edge({0, 2});
  g.insert_edge({1, 0});
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(1) == 1);
  CHECK(g.num_edges() == 3);
  g.delete_edge({0, 1});
  CHECK(g.degree(0) == 1);
  CHECK(g.num_edges() == 2);
}

TEST_CASE("inline slots fill first, spill only when full, backfill on delete") {
  SetGraph<SortedVectorSet> g(32, 10);
  for (VertexId v = 1; v <= 12; ++v) g.insert_edge({0, v});
  CHECK(g.inline_count(0) == 10);
  CHECK(g.spill_set(0).size() == 2);
  CHECK(g.degree(0) == 12);

  // duplicate goes nowhere
  CHECK_FALSE(g.insert_edge({0, 5}));
  CHECK(g.degree(0) == 12);

  // deleting an inline neighbor pulls one back from the spill
  CHECK(g.delete_edge({0, 1}));
  CHECK(g.inline_count(0) == 10);
  CHECK(g.spill_set(0).size() == 1);
  GraphView view(g);
  auto neighbors = derive_get_neighbors(view, 0);
  std::vector<VertexId> expect;
  for (VertexId v = 2; v <= 12; ++v) expect.push_back(v);
  CHECK(neighbors == expect);
}

TEST_CASE("derive_reduce") {
  auto g = t4_adapter<SortedVectorSet>(0);
  GraphView view(g);
  auto id_of = [](VertexId v) { return static_cast<uint64_t>(v); };
  auto plus = [](uint64_t a, uint64_t b) { return a + b; };
  CHECK(derive_reduce<uint64_t>(view, 2, id_of, plus, 0) == 4);
  CHECK(derive_reduce<uint64_t>(view, 3, [](VertexId) { return uint64_t{1}; },
                                plus, 0) == 1);

  SetGraph<SortedVectorSet> isolated(2, 0);
  GraphView iview(isolated);
  CHECK(derive_reduce<uint64_t>(iview, 0, id_of, plus, 77) == 77);
}

TEST_CASE("derive_count") {
  auto g = t4_adapter<SortedVectorSet>(0);
  GraphView view(g);
  CHECK(derive_count(view, 2, [](VertexId v) { return v < 2; }) == 2);
  CHECK(derive_count(view, 2, [](VertexId) { return false; }) == 0);
  CHECK(derive_count(view, 2, [](VertexId) { return true; }) == view.degree(2));
  CHECK(derive_degree(view, 2) == 3);
}

TEST_CASE("derive_get_neighbors") {
  auto g = t4_adapter<OrderedTreeSet>(0);
  GraphView view(g);
  CHECK(derive_get_neighbors(view, 2) == std::vector<VertexId>{0, 1, 3});
  CHECK(derive_get_neighbors(view, 3) == std::vector<VertexId>{2});
  SetGraph<OrderedTreeSet> isolated(1, 0);
  GraphView iview(isolated);
  CHECK(derive_get_neighbors(iview, 0).empty());
}

TEST_CASE("derive_filter materializes a fresh static snapshot") {
  auto g = t4_adapter<SortedVectorSet>(0);
  GraphView view(g);
  CsrGraph upper =
      derive_filter(view, [](VertexId u, VertexId v) { return u < v; });
  CHECK(upper.num_edges() == 4);
  CHECK(upper.neighbor_segment(0).size() == 2);  // (0,1), (0,2)
  CHECK(upper.neighbor_segment(2).size() == 1);  // (2,3)
  CHECK(g.num_edges() == 8);                     // source unmodified

  CsrGraph all = derive_filter(view, [](VertexId, VertexId) { return true; });
  CHECK(all.num_edges() == 8);
  CsrGraph none =
      derive_filter(view, [](VertexId, VertexId) { return false; });
  CHECK(none.num_edges() == 0);
  CHECK(none.num_vertices() == 4);
}

TEST_CASE("map-derived primitives equal direct reference computation") {
  Rng rng(2024);
  for (int trial = 0; trial < 250; ++trial) {
    uint64_t size = rng.next_below(501);
    std::vector<VertexId> members;
    for (uint64_t i = 0; i < size; ++i)
      members.push_back(static_cast<VertexId>(1 + rng.next_below(500)));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    SetGraph<LinearProbeSet> g(501, trial % 2 ? 10 : 0);
    for (VertexId v : members) g.insert_edge({0, v});
    GraphView view(g);

    uint64_t ref_sum =
        std::accumulate(members.begin(), members.end(), uint64_t{0});
    auto got_sum = derive_reduce<uint64_t>(
        view, 0, [](VertexId v) { return uint64_t{v}; },
        [](uint64_t a, uint64_t b) { return a + b; }, 0);
    CHECK(got_sum == ref_sum);

    uint64_t ref_count = static_cast<uint64_t>(std::count_if(
        members.begin(), members.end(), [](VertexId v) { return v % 3 == 0; }));
    CHECK(derive_count(view, 0, [](VertexId v) { return v % 3 == 0; }) ==
          ref_count);

    CHECK(derive_degree(view, 0) == members.size());
    CHECK(derive_get_neighbors(view, 0) == members);
  }
}

TEST_CASE("capability mask hides operations and fallbacks engage") {
  GraphData t4 = gbtest::t4();
  CsrGraph csr = CsrGraph::build(t4.n, t4.arcs);
  CountingGraph probe(csr);

  MaskedGraph masked(probe, api_config_by_name("min"));
  GraphView view(masked);

  // fallbacks: degree via counting map, num_edges via summing degrees
  CHECK(view.degree(2) == 3);
  CHECK(view.num_edges() == 8);
  CHECK(probe.degree_calls == 0);
  CHECK(probe.num_edges_calls == 0);
  CHECK(probe.early_exit_calls == 0);
  CHECK(probe.map_calls > 0);

  // direct calls on the masked handle refuse to pass through
  CHECK_THROWS_AS(masked.degree(0), unsupported_operation);
  CHECK_THROWS_AS(masked.num_edges(), unsupported_operation);

  // masking is semantics-preserving: BFS output identical to unmasked
  GraphView full_view(csr);
  auto masked_dist = bfs(view, 0).distances;
  auto full_dist = bfs(full_view, 0).distances;
  CHECK(masked_dist == full_dist);
}

TEST_CASE("mask cannot enable what the container lacks") {
  GraphData t4 = gbtest::t4();
  CsrGraph csr = CsrGraph::build(t4.n, t4.arcs);
  MaskedGraph min(csr, api_config_by_name("min"));
  CHECK_THROWS_AS(MaskedGraph(min, api_config_by_name("full")), config_error);

  // hash adjacency has no parallel maps; full would enable them
  SetGraph<LinearProbeSet> hash(4, 0);
  CHECK_THROWS_AS(MaskedGraph(hash, Capabilities::all()), config_error);
}

TEST_CASE("the nine API configurations") {
  CHECK(api_configs().size() == 9);
  Capabilities min_eff = api_config_by_name("min_efficient");
  CHECK(min_eff.has_degree);
  CHECK(min_eff.has_num_edges);
  CHECK_FALSE(min_eff.has_map_early_exit);
  CHECK_FALSE(min_eff.has_parallel_map);
  CHECK_FALSE(min_eff.has_parallel_map_early_exit);
  CHECK_THROWS_AS(api_config_by_name("bogus"), config_error);
}

TEST_CASE("early exit derived from iteration stops at the first hit") {
  auto g = t4_adapter<SortedVectorSet>(0);
  GraphView view(g);
  uint64_t calls = 0;
  view.map_neighbors_early_exit(2, [&](VertexId v) {
    ++calls;
    return v == 1;  // second element of the ordered set {0,1,3}
  });
  CHECK(calls == 2);

  // same through the guarded fallback when early exit is masked away
  MaskedGraph masked(g, api_config_by_name("min"));
  GraphView mview(masked);
  calls = 0;
  mview.map_neighbors_early_exit(2, [&](VertexId v) {
    ++calls;
    return v == 1;
  });
  CHECK(calls == 2);
}

TEST_CASE("metadata tracker follows applied updates only") {
  GraphData t4 = gbtest::t4();
  MetadataTracker meta(t4.n);
  for (const Edge& e : t4.arcs)
    meta.on_update(e, MetadataTracker::Kind::Insert, true);
  CHECK(meta.total_edges() == 8);
  CHECK(meta.degree(0) == 2);

  meta.on_update({0, 3}, MetadataTracker::Kind::Insert, true);
  CHECK(meta.degree(0) == 3);
  CHECK(meta.total_edges() == 9);

  // duplicate insert and absent delete: applied=false, no change
  meta.on_update({0, 1}, MetadataTracker::Kind::Insert, false);
  meta.on_update({1, 3}, MetadataTracker::Kind::Delete, false);
  CHECK(meta.degree(0) == 3);
  CHECK(meta.total_edges() == 9);

  MetadataTracker fresh(2);
  CHECK_THROWS_AS(
      fresh.on_update({0, 1}, MetadataTracker::Kind::Delete, true),
      std::logic_error);
}

TEST_CASE("adapter transparency across set kinds and inline settings") {
  GraphData g = gbtest::random_graph(11, 100, 0.05);

  auto collect = [&](const GraphContainer& c) {
    GraphView view(c);
    std::vector<std::vector<VertexId>> lists;
    for (uint64_t v = 0; v < g.n; ++v)
      lists.push_back(derive_get_neighbors(view, static_cast<VertexId>(v)));
    return lists;
  };

  CsrGraph csr = CsrGraph::build(g.n, g.arcs);
  auto reference = collect(csr);

  auto check_kind = [&](auto tag) {
    using Set = decltype(tag);
    for (size_t inline_k : {size_t{0}, size_t{10}}) {
      SetGraph<Set> sg(g.n, inline_k);
      sg.insert_sorted_batch(g.arcs);
      CHECK(sg.num_vertices() == g.n);
      CHECK(sg.num_edges() == g.arcs.size());
      CHECK(collect(sg) == reference);
    }
  };
  check_kind(SortedVectorSet{});
  check_kind(OrderedTreeSet{});
  check_kind(LinearProbeSet{});
  check_kind(ChunkedSortedSet{});
}
