#include "gb/algorithms.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>


#include "gb/buckets.hpp"
#include "gb/parallel.hpp"
#include "gb/rng.hpp"
#include "gb/traversal.hpp"
#include "gb/vertex_subset.hpp"

namespace gb {

namespace {

std::vector<std::atomic<VertexId>> make_atomic_ids(uint64_t n, VertexId init) {
  std::vector<std::atomic<VertexId>> v(n);
  for (auto& a : v) a.store(init, std::memory_order_relaxed);
  return v;
}

}  // namespace

BfsResult bfs(const GraphView& g, VertexId source) {
  uint64_t n = g.num_vertices();
  if (source >= n) throw std::out_of_range("bfs: source out of range");
  BfsResult res;
  res.distances.assign(n, kInfiniteDistance);
  auto parent = make_atomic_ids(n, kNoVertex);
  res.distances[source] = 0;
  parent[source].store(source, std::memory_order_relaxed);

  VertexSubset frontier = VertexSubset::singleton(n, source);
  uint64_t depth = 0;
  while (frontier.size() > 0) {
    ++depth;
    auto update = [&](VertexId u, VertexId v) {
      parent[v].store(u, std::memory_order_relaxed);
      res.distances[v] = depth;
      return true;
    };
    auto cond = [&](VertexId v) {
      return parent[v].load(std::memory_order_relaxed) == kNoVertex;
    };
    EdgeMapSpec spec{update, cond};
    frontier = edge_map(g, frontier, spec);
  }

  res.parents.resize(n);
  for (uint64_t v = 0; v < n; ++v)
    res.parents[v] = parent[v].load(std::memory_order_relaxed);
  return res;
}

std::vector<double> bc(const GraphView& g, VertexId source) {
  uint64_t n = g.num_vertices();
  if (source >= n) throw std::out_of_range("bc: source out of range");
  BfsResult tree = bfs(g, source);
  const auto& dist = tree.distances;

  uint64_t max_level = 0;
  for (uint64_t v = 0; v < n; ++v)
    if (dist[v] != kInfiniteDistance) max_level = std::max(max_level, dist[v]);
  std::vector<std::vector<VertexId>> levels(max_level + 1);
  for (uint64_t v = 0; v < n; ++v)
    if (dist[v] != kInfiniteDistance)
      levels[dist[v]].push_back(static_cast<VertexId>(v));

  // path counts, pulled level by level from the previous layer
  std::vector<double> sigma(n, 0.0);
  sigma[source] = 1.0;
  for (uint64_t d = 1; d <= max_level; ++d) {
    auto& level = levels[d];
    parallel_for(0, level.size(), [&](size_t k) {
      VertexId v = level[k];
      double total = 0.0;
      g.map_neighbors(v, [&](VertexId u) {
        if (dist[u] == d - 1) total += sigma[u];
      });
      sigma[v] = total;
    }, 64);
  }

  // dependencies, pulled from the next layer in reverse level order
  std::vector<double> delta(n, 0.0);
  for (uint64_t d = max_level; d-- > 0;) {
    auto& level = levels[d];
    parallel_for(0, level.size(), [&](size_t k) {
      VertexId v = level[k];
      double total = 0.0;
      g.map_neighbors(v, [&](VertexId w) {
        if (dist[w] == d + 1) total += (sigma[v] / sigma[w]) * (1.0 + delta[w]);
      });
      delta[v] = total;
    }, 64);
  }
  return delta;
}

namespace {

// Ball growing without the public-domain restriction on beta; the spanner
// construction wants rates above 1 on small graphs (near-singleton
// clusters).
LddResult ldd_impl(const GraphView& g, double beta, uint64_t seed);

}  // namespace

LddResult ldd(const GraphView& g, double beta, uint64_t seed) {
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::invalid_argument("ldd: beta must be in (0, 1]");
  return ldd_impl(g, beta, seed);
}

namespace {

LddResult ldd_impl(const GraphView& g, double beta, uint64_t seed) {
  uint64_t n = g.num_vertices();
  LddResult res;
  res.labels.assign(n, kNoVertex);
  res.parents.assign(n, kNoVertex);
  res.rounds.assign(n, 0);
  if (n == 0) return res;

  std::vector<uint64_t> start(n);
  double max_shift = 0.0;
  std::vector<double> shift(n);
  for (uint64_t v = 0; v < n; ++v) {
    shift[v] = rng_exponential(seed, v, 0, beta);
    max_shift = std::max(max_shift, shift[v]);
  }
  for (uint64_t v = 0; v < n; ++v)
    start[v] = static_cast<uint64_t>(std::floor(max_shift - shift[v]));

  auto label = make_atomic_ids(n, kNoVertex);
  auto candidate = make_atomic_ids(n, kNoVertex);
  std::vector<VertexId> frontier;  // labeled in the previous round
  uint64_t labeled = 0;
  uint64_t round = 0;
  while (labeled < n) {
    // wavefront arrivals; ties resolved toward the lowest center id
    parallel_for(0, frontier.size(), [&](size_t k) {
      VertexId u = frontier[k];
      VertexId c = label[u].load(std::memory_order_relaxed);
      g.map_neighbors(u, [&](VertexId v) {
        if (label[v].load(std::memory_order_relaxed) == kNoVertex)
          atomic_write_min(candidate[v], c);
      });
    }, 16);
    // vertices whose start time has come found their own cluster
    parallel_for(0, n, [&](size_t v) {
      if (label[v].load(std::memory_order_relaxed) == kNoVertex &&
          start[v] <= round)
        atomic_write_min(candidate[v], static_cast<VertexId>(v));
    }, 2048);

    std::vector<VertexId> next;
    for (uint64_t v = 0; v < n; ++v) {
      if (label[v].load(std::memory_order_relaxed) != kNoVertex) continue;
      VertexId c = candidate[v].load(std::memory_order_relaxed);
      if (c == kNoVertex) continue;
      label[v].store(c, std::memory_order_relaxed);
      res.rounds[v] = round;
      next.push_back(static_cast<VertexId>(v));
    }
    // tree edges: the smallest same-cluster neighbor from an earlier round
    parallel_for(0, next.size(), [&](size_t k) {
      VertexId v = next[k];
      VertexId c = label[v].load(std::memory_order_relaxed);
      VertexId best = kNoVertex;
      g.map_neighbors(v, [&](VertexId u) {
        if (label[u].load(std::memory_order_relaxed) == c &&
            res.rounds[u] < res.rounds[v] && u < best)
          best = u;
      });
      res.parents[v] = (v == c && best == kNoVertex) ? v : best;
    }, 64);
    labeled += next.size();
    frontier = std::move(next);
    ++round;
  }
  for (uint64_t v = 0; v < n; ++v)
    res.labels[v] = label[v].load(std::memory_order_relaxed);
  return res;
}

}  // namespace

std::vector<VertexId> cc(const GraphView& g) {
  uint64_t n = g.num_vertices();
  auto parent = make_atomic_ids(n, kNoVertex);
  for (uint64_t v = 0; v < n; ++v)
    parent[v].store(static_cast<VertexId>(v), std::memory_order_relaxed);

  auto find = [&](VertexId x) {
    while (true) {
      VertexId p = parent[x].load(std::memory_order_relaxed);
      if (p == x) return x;
      VertexId gp = parent[p].load(std::memory_order_relaxed);
      parent[x].compare_exchange_weak(p, gp, std::memory_order_relaxed);
      x = gp;
    }
  };
  auto unite = [&](VertexId a, VertexId b) {
    while (true) {
      VertexId ra = find(a);
      VertexId rb = find(b);
      if (ra == rb) return;
      // link the larger root under the smaller, so component roots are
      // their minimum ids
      VertexId hi = std::max(ra, rb), lo = std::min(ra, rb);
      VertexId expected = hi;
      if (parent[hi].compare_exchange_strong(expected, lo,
                                             std::memory_order_relaxed))
        return;
    }
  };

  parallel_for(0, n, [&](size_t u) {
    g.map_neighbors(static_cast<VertexId>(u),
                    [&](VertexId v) { unite(static_cast<VertexId>(u), v); });
  }, 64);

  std::vector<VertexId> labels(n);
  parallel_for(0, n, [&](size_t v) {
    labels[v] = find(static_cast<VertexId>(v));
  }, 2048);
  return labels;
}

std::vector<Edge> spanner(const GraphView& g, uint64_t k, uint64_t seed) {
  if (k < 1) throw std::invalid_argument("spanner: k must be >= 1");
  uint64_t n = g.num_vertices();
  if (n == 0) return {};
  double beta = std::log(static_cast<double>(std::max<uint64_t>(n, 2))) /
                static_cast<double>(k);

  LddResult clusters = ldd_impl(g, beta, seed);
  std::vector<Edge> arcs;
  for (uint64_t v = 0; v < n; ++v) {
    VertexId p = clusters.parents[v];
    if (p != kNoVertex && p != v) {
      arcs.push_back({static_cast<VertexId>(v), p});
      arcs.push_back({p, static_cast<VertexId>(v)});
    }
  }

  // one connecting arc per adjacent cluster pair; the lexicographically
  // smallest arc keeps the choice container-independent
  std::map<std::pair<VertexId, VertexId>, std::pair<VertexId, VertexId>> conn;
  for (uint64_t u = 0; u < n; ++u) {
    g.map_neighbors(static_cast<VertexId>(u), [&](VertexId v) {
      VertexId lu = clusters.labels[u], lv = clusters.labels[v];
      if (lu == lv) return;
      std::pair<VertexId, VertexId> key{std::min(lu, lv), std::max(lu, lv)};
      std::pair<VertexId, VertexId> arc{
          std::min(static_cast<VertexId>(u), v),
          std::max(static_cast<VertexId>(u), v)};
      auto [it, inserted] = conn.try_emplace(key, arc);
      if (!inserted && arc < it->second) it->second = arc;
    });
  }
  for (const auto& [key, arc] : conn) {
    arcs.push_back({arc.first, arc.second});
    arcs.push_back({arc.second, arc.first});
  }

  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return arcs;
}

AdsResult ads(const GraphView& g, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("ads: epsilon must be > 0");
  uint64_t n = g.num_vertices();
  AdsResult best;
  if (n == 0) return best;

  std::vector<int64_t> deg(n);
  for (uint64_t v = 0; v < n; ++v)
    deg[v] = static_cast<int64_t>(g.degree(static_cast<VertexId>(v)));
  std::vector<char> alive(n, 1);
  uint64_t alive_count = n;
  int64_t edges = static_cast<int64_t>(g.num_edges() / 2);

  double best_density = -1.0;
  while (alive_count > 0) {
    double density =
        static_cast<double>(edges) / static_cast<double>(alive_count);
    if (density >= best_density) {
      best_density = density;
      best.members.clear();
      for (uint64_t v = 0; v < n; ++v)
        if (alive[v]) best.members.push_back(static_cast<VertexId>(v));
      best.density = density;
    }

    double threshold = (1.0 + epsilon) * density;
    std::vector<VertexId> doomed;
    for (uint64_t v = 0; v < n; ++v)
      if (alive[v] && static_cast<double>(deg[v]) < threshold)
        doomed.push_back(static_cast<VertexId>(v));
    if (doomed.empty()) {
      // nothing below the threshold (e.g. a clique); peel the minimum
      // degree instead so the loop always terminates
      int64_t min_deg = INT64_MAX;
      for (uint64_t v = 0; v < n; ++v)
        if (alive[v]) min_deg = std::min(min_deg, deg[v]);
      for (uint64_t v = 0; v < n; ++v)
        if (alive[v] && deg[v] == min_deg)
          doomed.push_back(static_cast<VertexId>(v));
    }
    for (VertexId v : doomed) {
      alive[v] = 0;
      edges -= deg[v];
      --alive_count;
      g.map_neighbors(v, [&](VertexId u) {
        if (alive[u]) --deg[u];
      });
    }
  }
  return best;
}

std::vector<uint64_t> kcore(const GraphView& g) {
  uint64_t n = g.num_vertices();
  std::vector<uint64_t> priorities(n);
  for (uint64_t v = 0; v < n; ++v)
    priorities[v] = g.degree(static_cast<VertexId>(v));

  std::vector<std::atomic<int64_t>> remaining(n);
  for (uint64_t v = 0; v < n; ++v)
    remaining[v].store(static_cast<int64_t>(priorities[v]),
                       std::memory_order_relaxed);

  Buckets buckets(priorities);
  std::vector<uint64_t> coreness(n, 0);
  AtomicBitset touched(n);
  while (auto bucket = buckets.next_bucket()) {
    uint64_t k = bucket->priority;
    auto& peel = bucket->vertices;
    std::vector<std::vector<VertexId>> touched_local(
        static_cast<size_t>(num_workers()));
    parallel_for(0, peel.size(), [&](size_t idx) {
      VertexId u = peel[idx];
      coreness[u] = k;
      g.map_neighbors(u, [&](VertexId v) {
        if (buckets.priority_of(v) > k) {
          remaining[v].fetch_sub(1, std::memory_order_relaxed);
          if (touched.try_claim(v))
            touched_local[static_cast<size_t>(worker_id())]
                .push_back(v);
        }
      });
    }, 16);
    for (auto& bucket_touched : touched_local) {
      for (VertexId v : bucket_touched) {
        int64_t rem = remaining[v].load(std::memory_order_relaxed);
        uint64_t new_priority =
            std::max<uint64_t>(k, rem < 0 ? 0 : static_cast<uint64_t>(rem));
        buckets.update(v, new_priority);
      }
    }
    // reset claims for the next batch
    for (auto& bucket_touched : touched_local)
      for (VertexId v : bucket_touched) touched.clear(v);
  }
  return coreness;
}

std::vector<uint32_t> coloring(const GraphView& g) {
  uint64_t n = g.num_vertices();
  std::vector<uint32_t> llf(n);
  for (uint64_t v = 0; v < n; ++v)
    llf[v] = static_cast<uint32_t>(
        std::bit_width(g.degree(static_cast<VertexId>(v))));
  // higher log-degree first, ties to the lower id
  auto beats = [&](VertexId a, VertexId b) {
    return llf[a] != llf[b] ? llf[a] > llf[b] : a < b;
  };

  std::vector<std::atomic<int64_t>> waiting(n);
  for (auto& w : waiting) w.store(0, std::memory_order_relaxed);
  parallel_for(0, n, [&](size_t v) {
    int64_t count = 0;
    g.map_neighbors(static_cast<VertexId>(v), [&](VertexId u) {
      if (beats(u, static_cast<VertexId>(v))) ++count;
    });
    waiting[v].store(count, std::memory_order_relaxed);
  }, 256);

  constexpr uint32_t kUncolored = UINT32_MAX;
  std::vector<uint32_t> colors(n, kUncolored);
  std::vector<VertexId> frontier;
  for (uint64_t v = 0; v < n; ++v)
    if (waiting[v].load(std::memory_order_relaxed) == 0)
      frontier.push_back(static_cast<VertexId>(v));

  std::vector<std::vector<VertexId>> next_local(
      static_cast<size_t>(num_workers()));
  while (!frontier.empty()) {
    parallel_for(0, frontier.size(), [&](size_t k) {
      VertexId v = frontier[k];
      std::vector<char> used;
      g.map_neighbors(v, [&](VertexId u) {
        if (!beats(u, v)) return;
        uint32_t c = colors[u];
        if (c >= used.size()) used.resize(c + 1, 0);
        used[c] = 1;
      });
      uint32_t c = 0;
      while (c < used.size() && used[c]) ++c;
      colors[v] = c;
      g.map_neighbors(v, [&](VertexId u) {
        if (beats(u, v)) return;
        if (waiting[u].fetch_sub(1, std::memory_order_relaxed) == 1)
          next_local[static_cast<size_t>(worker_id())].push_back(u);
      });
    }, 16);
    frontier.clear();
    for (auto& loc : next_local) {
      frontier.insert(frontier.end(), loc.begin(), loc.end());
      loc.clear();
    }
  }
  return colors;
}

std::vector<uint8_t> mis(const GraphView& g, uint64_t seed) {
  uint64_t n = g.num_vertices();
  std::vector<uint64_t> rank(n);
  for (uint64_t v = 0; v < n; ++v) rank[v] = rng_u64(seed, 7, v);
  // lower (rank, id) wins
  auto beats = [&](VertexId a, VertexId b) {
    return rank[a] != rank[b] ? rank[a] < rank[b] : a < b;
  };

  enum : uint8_t { kUndecided = 0, kIn = 1, kOut = 2 };
  std::vector<std::atomic<uint8_t>> status(n);
  for (auto& s : status) s.store(kUndecided, std::memory_order_relaxed);
  std::vector<std::atomic<int64_t>> waiting(n);
  for (auto& w : waiting) w.store(0, std::memory_order_relaxed);
  parallel_for(0, n, [&](size_t v) {
    int64_t count = 0;
    g.map_neighbors(static_cast<VertexId>(v), [&](VertexId u) {
      if (beats(u, static_cast<VertexId>(v))) ++count;
    });
    waiting[v].store(count, std::memory_order_relaxed);
  }, 256);

  std::vector<VertexId> joiners;
  for (uint64_t v = 0; v < n; ++v)
    if (waiting[v].load(std::memory_order_relaxed) == 0)
      joiners.push_back(static_cast<VertexId>(v));

  std::vector<std::vector<VertexId>> local(
      static_cast<size_t>(num_workers()));
  while (!joiners.empty()) {
    // joiners enter the set and knock their neighbors out
    std::vector<VertexId> newly_out;
    parallel_for(0, joiners.size(), [&](size_t k) {
      VertexId v = joiners[k];
      status[v].store(kIn, std::memory_order_relaxed);
      g.map_neighbors(v, [&](VertexId u) {
        uint8_t expected = kUndecided;
        if (status[u].compare_exchange_strong(expected, kOut,
                                              std::memory_order_relaxed))
          local[static_cast<size_t>(worker_id())].push_back(u);
      });
    }, 16);
    for (auto& loc : local) {
      newly_out.insert(newly_out.end(), loc.begin(), loc.end());
      loc.clear();
    }
    // every decided vertex releases its lower-priority neighbors
    std::vector<VertexId> decided(joiners);
    decided.insert(decided.end(), newly_out.begin(), newly_out.end());
    parallel_for(0, decided.size(), [&](size_t k) {
      VertexId v = decided[k];
      g.map_neighbors(v, [&](VertexId u) {
        if (beats(v, u) &&
            status[u].load(std::memory_order_relaxed) == kUndecided) {
          if (waiting[u].fetch_sub(1, std::memory_order_relaxed) == 1)
            local[static_cast<size_t>(worker_id())].push_back(u);
        }
      });
    }, 16);
    joiners.clear();
    for (auto& loc : local) {
      for (VertexId u : loc)
        if (status[u].load(std::memory_order_relaxed) == kUndecided)
          joiners.push_back(u);
      loc.clear();
    }
  }

  std::vector<uint8_t> in_set(n, 0);
  for (uint64_t v = 0; v < n; ++v)
    in_set[v] = status[v].load(std::memory_order_relaxed) == kIn ? 1 : 0;
  return in_set;
}

std::vector<double> pagerank(const GraphView& g, double damping,
                             uint64_t max_iters, double tolerance) {
  if (!(damping > 0.0 && damping < 1.0))
    throw std::invalid_argument("pagerank: damping must be in (0, 1)");
  if (!(tolerance > 0.0))
    throw std::invalid_argument("pagerank: tolerance must be > 0");
  uint64_t n = g.num_vertices();
  if (n == 0) return {};

  std::vector<uint64_t> deg(n);
  for (uint64_t v = 0; v < n; ++v) deg[v] = g.degree(static_cast<VertexId>(v));

  std::vector<double> p(n, 1.0 / static_cast<double>(n));
  std::vector<double> contrib(n, 0.0);
  std::vector<double> next(n, 0.0);
  std::vector<uint64_t> all_words((n + 63) / 64, ~uint64_t{0});
  if (n % 64 != 0) all_words.back() = (uint64_t{1} << (n % 64)) - 1;
  VertexSubset everyone(n, std::move(all_words), VertexSubset::Repr::Dense);

  for (uint64_t iter = 0; iter < max_iters; ++iter) {
    double dangling = 0.0;
    for (uint64_t v = 0; v < n; ++v) {
      contrib[v] = deg[v] ? p[v] / static_cast<double>(deg[v]) : 0.0;
      if (deg[v] == 0) dangling += p[v];
    }
    std::fill(next.begin(), next.end(), 0.0);

    auto update = [&](VertexId u, VertexId v) {
      next[v] += contrib[u];
      return true;
    };
    auto cond = [&](VertexId) { return true; };
    EdgeMapSpec spec{update, cond};
    spec.allow_dense_early_exit = false;  // every contribution counts
    edge_map(g, everyone, spec);

    double base = (1.0 - damping) / static_cast<double>(n) +
                  damping * dangling / static_cast<double>(n);
    double err = 0.0;
    for (uint64_t v = 0; v < n; ++v) {
      next[v] = base + damping * next[v];
      err += std::abs(next[v] - p[v]);
    }
    p.swap(next);
    if (err < tolerance) break;
  }
  return p;
}

}  // namespace gb
