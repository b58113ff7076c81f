// Benchmark harness for graph containers.
//
//   graphbench generate --graph rmat:17:1048576 --seed 1 --out g.gbcsr
//   graphbench convert  --in edges.txt --out g.gbcsr
//   graphbench run      --algorithm bfs --container csr --graph t4 --out r.tsv
//   graphbench ablation --algorithm pagerank --graph er:1000:0.01 --out a.tsv
//   graphbench updates  --container vector_set --graph rmat:14:16384
//   graphbench verify   --graph er:100:0.05 --seed 1

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gb/bench.hpp"
#include "gb/io.hpp"
#include "gb/parallel.hpp"

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw gb::config_error("cannot write output file: " + path);
  return out;
}

void emit_records(const std::vector<gb::BenchRecord>& records,
                  const std::string& out_path) {
  std::ostringstream buffer;
  gb::write_tsv_header(buffer);
  for (const auto& r : records) gb::write_tsv_record(buffer, r);
  if (out_path.empty()) {
    std::cout << buffer.str();
  } else {
    open_out(out_path) << buffer.str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph container benchmark harness"};
  app.require_subcommand(1);

  std::string graph_spec = "t4";
  std::string container = "csr";
  std::string algorithm = "bfs";
  std::string config = "full";
  std::string out_path;
  std::string in_path;
  uint64_t trials = 3;
  int threads = 0;
  uint64_t seed = 1;
  std::vector<uint64_t> batch_sizes = {10, 100, 1000, 10000, 100000, 1000000};
  gb::AlgoParams params;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--graph", graph_spec,
                    "t4 | er:<n>:<p> | rmat:<log2_n>:<arcs> | <file>");
    cmd->add_option("--seed", seed, "seed for generators and algorithms");
    cmd->add_option("--threads", threads, "worker threads (0 = all)");
  };

  CLI::App* generate = app.add_subcommand("generate", "write a graph file");
  add_common(generate);
  generate->add_option("--out", out_path, "output path (binary format)")
      ->required();

  CLI::App* convert =
      app.add_subcommand("convert", "convert between edge-list and binary");
  convert->add_option("--in", in_path, "input graph file")->required();
  convert->add_option("--out", out_path, "output path")->required();
  bool to_text = false;
  convert->add_flag("--to-text", to_text, "write an edge list (default: binary)");

  CLI::App* run = app.add_subcommand("run", "time one algorithm");
  add_common(run);
  run->add_option("--algorithm", algorithm, "algorithm name");
  run->add_option("--container", container, "container name");
  run->add_option("--config", config, "API configuration");
  run->add_option("--trials", trials, "timed trials after the warmup");
  run->add_option("--out", out_path, "TSV output path (default: stdout)");
  run->add_option("--source", params.source, "source vertex (bfs, bc)");
  run->add_option("--k", params.k, "spanner stretch parameter");
  run->add_option("--beta", params.beta, "ldd beta");
  run->add_option("--epsilon", params.epsilon, "ads epsilon");
  run->add_option("--damping", params.damping, "pagerank damping");
  run->add_option("--max-iters", params.max_iters, "pagerank iteration cap");
  run->add_option("--tolerance", params.tolerance, "pagerank L1 tolerance");

  CLI::App* ablation =
      app.add_subcommand("ablation", "sweep all API configurations on csr");
  add_common(ablation);
  ablation->add_option("--algorithm", algorithm, "algorithm name");
  ablation->add_option("--trials", trials, "timed trials per configuration");
  ablation->add_option("--out", out_path, "TSV output path (default: stdout)");

  CLI::App* updates =
      app.add_subcommand("updates", "batch insert/delete throughput");
  add_common(updates);
  updates->add_option("--container", container, "dynamic container name");
  updates->add_option("--batch-sizes", batch_sizes, "batch sizes to sweep");
  updates->add_option("--out", out_path, "TSV output path (default: stdout)");

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check every algorithm x container x config");
  add_common(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) {
      gb::GraphData g = gb::resolve_graph(graph_spec, seed);
      gb::save_binary(gb::CsrGraph::build(g.n, g.arcs), out_path);
      std::cout << "wrote " << out_path << " n=" << g.n
                << " m=" << g.arcs.size() << "\n";
    } else if (*convert) {
      gb::GraphData g = gb::resolve_graph(in_path, seed);
      if (to_text) {
        gb::save_edge_list(g, out_path);
      } else {
        gb::save_binary(gb::CsrGraph::build(g.n, g.arcs), out_path);
      }
      std::cout << "wrote " << out_path << " n=" << g.n
                << " m=" << g.arcs.size() << "\n";
    } else if (*run) {
      gb::GraphData g = gb::resolve_graph(graph_spec, seed);
      gb::RunRequest req{algorithm, container, config, trials,
                         threads,   seed,      params};
      gb::RunResult result = gb::run_benchmark(g, req);
      emit_records(result.records, out_path);
      if (result.container_bytes && !g.arcs.empty())
        std::cerr << "# space container=" << container << " bytes_per_edge="
                  << static_cast<double>(result.container_bytes) /
                         static_cast<double>(g.arcs.size())
                  << "\n";
    } else if (*ablation) {
      gb::GraphData g = gb::resolve_graph(graph_spec, seed);
      gb::AblationResult result =
          gb::run_ablation(g, algorithm, trials, threads, seed, params);
      emit_records(result.records, out_path);
      std::cerr << "# config\tmean_seconds\tslowdown_vs_full\tdigest\n";
      for (const auto& row : result.rows)
        std::cerr << "# " << row.config << '\t' << row.mean_seconds << '\t'
                  << row.slowdown_vs_full << '\t' << row.digest << "\n";
    } else if (*updates) {
      gb::GraphData g = gb::resolve_graph(graph_spec, seed);
      gb::UpdatesResult result =
          gb::run_updates(g, container, batch_sizes, seed, threads);
      emit_records(result.records, out_path);
      if (!result.restored) {
        std::cerr << "updates: graph did not return to the base arc set\n";
        return 1;
      }
    } else if (*verify) {
      gb::GraphData g = gb::resolve_graph(graph_spec, seed);
      gb::VerifyOptions opts;
      opts.seed = seed;
      opts.params = params;
      bool ok = gb::verify_graph(g, opts, std::cout);
      return ok ? 0 : 1;
    }
  } catch (const gb::config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gb::unsupported_operation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
