#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "gb/algorithms.hpp"
#include "gb/digest.hpp"
#include "gb/graph_container.hpp"
#include "gb/graph_data.hpp"

namespace gb {

struct ContainerInfo {
  std::string name;
  bool dynamic = false;
  std::function<GraphContainerPtr(const GraphData&)> build;
};

// csr, csr_compressed, and the four set-backed adjacencies with and
// without the inline optimization.
const std::vector<ContainerInfo>& containers();
const ContainerInfo& container_by_name(const std::string& name);

struct AlgorithmInfo {
  std::string name;
  std::function<CanonicalOutput(const GraphView&, const AlgoParams&)> run;
};

const std::vector<AlgorithmInfo>& algorithms();
const AlgorithmInfo& algorithm_by_name(const std::string& name);

// Graph specs understood by the harness:
//   t4                   the 4-vertex fixture
//   er:<n>:<p>           seeded uniform random graph
//   rmat:<log2_n>:<arcs> seeded skewed random graph
//   <path>               edge-list file, or binary file when it has the
//                        binary magic
GraphData resolve_graph(const std::string& spec, uint64_t seed);

}  // namespace gb
