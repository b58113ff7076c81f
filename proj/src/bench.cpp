#include "gb/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <unordered_set>

#include "gb/batch.hpp"
#include "gb/checks.hpp"
#include "gb/derive.hpp"
#include "gb/mask.hpp"
#include "gb/parallel.hpp"

namespace gb {

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch())
      .count();
}

std::string format_seconds(double s) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", s);
  return buf;
}

int effective_threads(int requested) {
  return requested > 0 ? requested : num_workers();
}

struct ThreadScope {
  explicit ThreadScope(int threads) : saved_(num_workers()) {
    set_num_workers(threads);
  }
  ~ThreadScope() { set_num_workers(saved_); }
  int saved_;
};

uint64_t arc_key(Edge e) {
  return (static_cast<uint64_t>(e.src) << 32) | e.dst;
}

uint64_t stats_digest(const GraphContainer& c) {
  GraphView view(c);
  Digest d;
  d.absorb(view.num_vertices());
  d.absorb(view.num_edges());
  return d.value();
}

}  // namespace

void write_tsv_header(std::ostream& out) {
  out << "container\tworkload\tgraph\tconfig\ttrial\tthreads\tseed\tseconds"
         "\tdigest\n";
}

void write_tsv_record(std::ostream& out, const BenchRecord& r) {
  out << r.container << '\t' << r.workload << '\t' << r.graph << '\t'
      << r.config << '\t' << r.trial << '\t' << r.threads << '\t' << r.seed
      << '\t' << format_seconds(r.seconds) << '\t' << r.digest << '\n';
}

RunResult run_benchmark(const GraphData& g, const RunRequest& req) {
  if (req.trials == 0) throw config_error("trials must be >= 1");
  const ContainerInfo& cinfo = container_by_name(req.container);
  const AlgorithmInfo& ainfo = algorithm_by_name(req.algorithm);
  Capabilities requested = api_config_by_name(req.config);

  int threads = effective_threads(req.threads);
  ThreadScope scope(threads);

  GraphContainerPtr container = cinfo.build(g);
  Capabilities effective = requested.intersect(container->capabilities());
  MaskedGraph masked(*container, effective);
  GraphView view(masked);

  AlgoParams params = req.params;
  params.seed = req.seed;

  RunResult result;
  result.container_bytes = container->memory_bytes();
  // untimed warmup; also pins the digest all trials must reproduce
  CanonicalOutput warm = ainfo.run(view, params);
  result.digest = warm.digest();

  double total = 0.0;
  for (uint64_t t = 0; t < req.trials; ++t) {
    double begin = now_seconds();
    CanonicalOutput out = ainfo.run(view, params);
    double elapsed = now_seconds() - begin;
    (void)out;
    total += elapsed;
    result.records.push_back({req.container, req.algorithm, g.name,
                              req.config, t, threads, req.seed, elapsed,
                              result.digest});
  }
  result.mean_seconds = total / static_cast<double>(req.trials);
  return result;
}

AblationResult run_ablation(const GraphData& g, const std::string& algorithm,
                            uint64_t trials, int threads, uint64_t seed,
                            const AlgoParams& params) {
  AblationResult result;
  double full_mean = 0.0;
  for (const ApiConfig& config : api_configs()) {
    RunRequest req;
    req.algorithm = algorithm;
    req.container = "csr";
    req.config = std::string(config.name);
    req.trials = trials;
    req.threads = threads;
    req.seed = seed;
    req.params = params;
    RunResult run = run_benchmark(g, req);
    if (config.name == "full") full_mean = run.mean_seconds;
    result.rows.push_back({std::string(config.name), run.mean_seconds, 0.0,
                           run.digest});
    result.records.insert(result.records.end(), run.records.begin(),
                          run.records.end());
  }
  for (AblationRow& row : result.rows)
    row.slowdown_vs_full = full_mean > 0.0 ? row.mean_seconds / full_mean : 0.0;
  return result;
}

UpdatesResult run_updates(const GraphData& g, const std::string& container,
                          const std::vector<uint64_t>& batch_sizes,
                          uint64_t seed, int threads) {
  const ContainerInfo& cinfo = container_by_name(container);
  for (uint64_t size : batch_sizes)
    if (size == 0) throw config_error("batch sizes must be positive");

  int effective = effective_threads(threads);
  ThreadScope scope(effective);

  GraphContainerPtr built = cinfo.build(g);
  GraphContainer& c = *built;
  if (!cinfo.dynamic) {
    // fail the same way the container itself would
    c.insert_sorted_batch({});
  }

  std::unordered_set<uint64_t> base_keys;
  base_keys.reserve(g.arcs.size() * 2);
  for (const Edge& e : g.arcs) base_keys.insert(arc_key(e));

  RmatParams rmat;
  rmat.log2_n = 1;
  while ((uint64_t{1} << rmat.log2_n) < g.n) ++rmat.log2_n;

  UpdatesResult result;
  for (uint64_t size : batch_sizes) {
    for (uint64_t rep = 0; rep < 3; ++rep) {
      uint64_t batch_seed = hash_combine(hash_combine(seed, size), rep);
      EdgeBatch raw = generate_update_batch(rmat, size, batch_seed);
      EdgeBatch fresh;
      fresh.updates.reserve(raw.updates.size());
      for (Edge e : raw.updates) {
        if (e.src >= g.n || e.dst >= g.n) continue;
        if (base_keys.count(arc_key(e))) continue;
        fresh.updates.push_back(e);
      }

      BatchForm form = c.preferred_batch_form();
      double begin = now_seconds();
      PreparedBatch pb = prepare(fresh, form);
      apply_insert(c, pb);
      double insert_time = now_seconds() - begin;
      result.records.push_back({container, "insert_" + std::to_string(size),
                                g.name, "full", rep, effective, seed,
                                insert_time, stats_digest(c)});

      begin = now_seconds();
      PreparedBatch pd = prepare(fresh, form);
      apply_delete(c, pd);
      double delete_time = now_seconds() - begin;
      result.records.push_back({container, "delete_" + std::to_string(size),
                                g.name, "full", rep, effective, seed,
                                delete_time, stats_digest(c)});
    }
  }

  // the whole sweep must restore the base graph exactly
  GraphView view(c);
  result.restored = view.num_vertices() == g.n && view.num_edges() == g.arcs.size();
  if (result.restored) {
    std::vector<Edge> now;
    now.reserve(g.arcs.size());
    for (uint64_t v = 0; v < g.n && result.restored; ++v)
      for (VertexId u : derive_get_neighbors(view, static_cast<VertexId>(v)))
        now.push_back({static_cast<VertexId>(v), u});
    result.restored = result.restored && now == g.arcs;
  }
  return result;
}

namespace {

struct Comparison {
  bool ok = true;
  std::string detail;
};

Comparison compare_outputs(const std::string& algorithm,
                           const CanonicalOutput& reference,
                           const CanonicalOutput& candidate) {
  Comparison cmp;
  if (reference.ints != candidate.ints) {
    cmp.ok = false;
    cmp.detail = "integer output differs from reference";
    return cmp;
  }
  if (reference.reals.size() != candidate.reals.size()) {
    cmp.ok = false;
    cmp.detail = "real output length differs from reference";
    return cmp;
  }
  if (algorithm == "pagerank") {
    double l1 = 0.0;
    for (size_t i = 0; i < reference.reals.size(); ++i)
      l1 += std::abs(reference.reals[i] - candidate.reals[i]);
    if (l1 > 1e-7) {
      cmp.ok = false;
      cmp.detail = "pagerank L1 distance " + std::to_string(l1) + " > 1e-7";
    }
    return cmp;
  }
  if (algorithm == "bc") {
    for (size_t i = 0; i < reference.reals.size(); ++i)
      if (std::abs(reference.reals[i] - candidate.reals[i]) > 1e-9) {
        cmp.ok = false;
        cmp.detail = "bc dependency differs at vertex " + std::to_string(i);
        return cmp;
      }
    return cmp;
  }
  if (reference.reals != candidate.reals) {
    cmp.ok = false;
    cmp.detail = "real output differs from reference";
  }
  return cmp;
}

std::optional<std::string> check_certificate(const std::string& algorithm,
                                             const GraphData& g,
                                             const CanonicalOutput& out) {
  if (algorithm == "coloring") {
    std::vector<uint32_t> colors(out.ints.begin(), out.ints.end());
    return check_coloring(g, colors);
  }
  if (algorithm == "mis") {
    std::vector<uint8_t> flags(out.ints.begin(), out.ints.end());
    return check_mis(g, flags);
  }
  if (algorithm == "ldd") {
    std::vector<VertexId> labels(out.ints.begin(), out.ints.end());
    return check_ldd(g, labels);
  }
  if (algorithm == "cc") {
    std::vector<VertexId> labels(out.ints.begin(), out.ints.end());
    return check_cc(g, labels);
  }
  if (algorithm == "spanner") {
    std::vector<Edge> arcs;
    for (size_t i = 0; i + 1 < out.ints.size(); i += 2)
      arcs.push_back({static_cast<VertexId>(out.ints[i]),
                      static_cast<VertexId>(out.ints[i + 1])});
    return check_spanner(g, arcs);
  }
  if (algorithm == "ads") {
    AdsResult r;
    for (uint64_t v : out.ints) r.members.push_back(static_cast<VertexId>(v));
    r.density = out.reals.empty() ? 0.0 : out.reals[0];
    return check_ads(g, r);
  }
  return std::nullopt;
}

}  // namespace

bool verify_graph(const GraphData& g, const VerifyOptions& opts,
                  std::ostream& report) {
  ThreadScope scope(1);  // single-threaded is the reference configuration

  if (g.n == 0) {
    report << "verify graph=" << g.name << " n=0 m=0 seed=" << opts.seed
           << "\nverify combinations=0 mismatches=0 result=PASS\n";
    return true;
  }

  std::vector<const ContainerInfo*> pool;
  for (const auto& c : containers()) pool.push_back(&c);
  if (opts.extra_containers)
    for (const auto& c : *opts.extra_containers) pool.push_back(&c);

  AlgoParams params = opts.params;
  params.seed = opts.seed;

  report << "verify graph=" << g.name << " n=" << g.n << " m=" << g.arcs.size()
         << " seed=" << opts.seed << "\n";

  uint64_t combinations = 0;
  uint64_t mismatches = 0;
  for (const AlgorithmInfo& algo : algorithms()) {
    // reference: csr with the full API at one thread
    GraphContainerPtr ref_container = container_by_name("csr").build(g);
    GraphView ref_view(*ref_container);
    CanonicalOutput reference = algo.run(ref_view, params);
    if (auto bad = check_certificate(algo.name, g, reference)) {
      report << "MISMATCH algorithm=" << algo.name
             << " container=csr config=full detail=" << *bad << "\n";
      ++mismatches;
    }

    for (const ContainerInfo* cinfo : pool) {
      GraphContainerPtr container = cinfo->build(g);
      for (const ApiConfig& config : api_configs()) {
        Capabilities effective =
            config.caps.intersect(container->capabilities());
        MaskedGraph masked(*container, effective);
        GraphView view(masked);
        CanonicalOutput out = algo.run(view, params);
        ++combinations;
        Comparison cmp = compare_outputs(algo.name, reference, out);
        std::optional<std::string> cert;
        if (cmp.ok) cert = check_certificate(algo.name, g, out);
        if (!cmp.ok || cert) {
          report << "MISMATCH algorithm=" << algo.name
                 << " container=" << cinfo->name << " config=" << config.name
                 << " detail=" << (cmp.ok ? *cert : cmp.detail) << "\n";
          ++mismatches;
        }
      }
    }
  }
  report << "verify combinations=" << combinations
         << " mismatches=" << mismatches << " result="
         << (mismatches == 0 ? "PASS" : "FAIL") << "\n";
  return mismatches == 0;
}

}  // namespace gb
