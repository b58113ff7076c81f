#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gb/capabilities.hpp"
#include "gb/registry.hpp"

namespace gb {

// One timed measurement. `workload` holds the algorithm name, or
// insert_<size> / delete_<size> for update benchmarks.
struct BenchRecord {
  std::string container;
  std::string workload;
  std::string graph;
  std::string config;
  uint64_t trial = 0;
  int threads = 1;
  uint64_t seed = 0;
  double seconds = 0.0;
  uint64_t digest = 0;
};

void write_tsv_header(std::ostream& out);
void write_tsv_record(std::ostream& out, const BenchRecord& r);

struct RunRequest {
  std::string algorithm;
  std::string container = "csr";
  std::string config = "full";
  uint64_t trials = 3;
  int threads = 0;  // 0 = all hardware threads
  uint64_t seed = 1;
  AlgoParams params;
};

struct RunResult {
  std::vector<BenchRecord> records;
  uint64_t digest = 0;
  double mean_seconds = 0.0;
  uint64_t container_bytes = 0;  // 0 when the container cannot report
};

// One untimed warmup plus `trials` timed runs. The requested API config
// is intersected with what the container actually provides.
RunResult run_benchmark(const GraphData& g, const RunRequest& req);

struct AblationRow {
  std::string config;
  double mean_seconds = 0.0;
  double slowdown_vs_full = 0.0;
  uint64_t digest = 0;
};

struct AblationResult {
  std::vector<BenchRecord> records;
  std::vector<AblationRow> rows;  // one per API configuration
};

// Sweeps all API configurations over the csr container.
AblationResult run_ablation(const GraphData& g, const std::string& algorithm,
                            uint64_t trials, int threads, uint64_t seed,
                            const AlgoParams& params);

struct UpdatesResult {
  std::vector<BenchRecord> records;
  bool restored = false;  // the graph equals the base after the sweep
};

// For each batch size: three repetitions of timed insert + timed delete
// of a freshly sampled batch (kept disjoint from the base graph so the
// deletes restore it exactly). Throughput = size / seconds.
UpdatesResult run_updates(const GraphData& g, const std::string& container,
                          const std::vector<uint64_t>& batch_sizes,
                          uint64_t seed, int threads);

struct VerifyOptions {
  uint64_t seed = 1;
  AlgoParams params;
  const std::vector<ContainerInfo>* extra_containers = nullptr;
};

// Runs every algorithm x container x API-config combination at one
// thread and compares canonical outputs and certificates against the
// csr/full reference. Returns true when everything matches; mismatches
// are reported by name.
bool verify_graph(const GraphData& g, const VerifyOptions& opts,
                  std::ostream& report);

}  // namespace gb
