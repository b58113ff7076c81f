#include "gb/registry.hpp"

#include <charconv>
#include <fstream>

#include "gb/compressed_csr.hpp"
#include "gb/csr.hpp"
#include "gb/generators.hpp"
#include "gb/io.hpp"
#include "gb/set_graph.hpp"

namespace gb {

namespace {

template <class Set>
GraphContainerPtr build_set_graph(const GraphData& g, size_t inline_k) {
  auto sg = std::make_unique<SetGraph<Set>>(g.n, inline_k);
  sg->insert_sorted_batch(g.arcs);
  return sg;
}

CanonicalOutput out_bfs(const GraphView& g, const AlgoParams& p) {
  CanonicalOutput out;
  out.ints = bfs(g, p.source).distances;
  return out;
}

CanonicalOutput out_bc(const GraphView& g, const AlgoParams& p) {
  CanonicalOutput out;
  out.reals = bc(g, p.source);
  return out;
}

CanonicalOutput out_spanner(const GraphView& g, const AlgoParams& p) {
  CanonicalOutput out;
  for (const Edge& e : spanner(g, p.k, p.seed)) {
    out.ints.push_back(e.src);
    out.ints.push_back(e.dst);
  }
  return out;
}

CanonicalOutput out_ldd(const GraphView& g, const AlgoParams& p) {
  CanonicalOutput out;
  for (VertexId l : ldd(g, p.beta, p.seed).labels) out.ints.push_back(l);
  return out;
}

CanonicalOutput out_cc(const GraphView& g, const AlgoParams&) {
  CanonicalOutput out;
  for (VertexId l : cc(g)) out.ints.push_back(l);
  return out;
}

CanonicalOutput out_ads(const GraphView& g, const AlgoParams& p) {
  CanonicalOutput out;
  AdsResult r = ads(g, p.epsilon);
  for (VertexId v : r.members) out.ints.push_back(v);
  out.reals.push_back(r.density);
  return out;
}

CanonicalOutput out_kcore(const GraphView& g, const AlgoParams&) {
  CanonicalOutput out;
  out.ints = kcore(g);
  return out;
}

CanonicalOutput out_coloring(const GraphView& g, const AlgoParams&) {
  CanonicalOutput out;
  for (uint32_t c : coloring(g)) out.ints.push_back(c);
  return out;
}

CanonicalOutput out_mis(const GraphView& g, const AlgoParams& p) {
  CanonicalOutput out;
  for (uint8_t f : mis(g, p.seed)) out.ints.push_back(f);
  return out;
}

CanonicalOutput out_pagerank(const GraphView& g, const AlgoParams& p) {
  CanonicalOutput out;
  out.reals = pagerank(g, p.damping, p.max_iters, p.tolerance);
  return out;
}

uint64_t parse_u64(std::string_view s, const char* what) {
  uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw config_error(std::string("bad ") + what + ": " + std::string(s));
  return value;
}

double parse_double(std::string_view s, const char* what) {
  try {
    size_t consumed = 0;
    double value = std::stod(std::string(s), &consumed);
    if (consumed != s.size())
      throw config_error(std::string("bad ") + what + ": " + std::string(s));
    return value;
  } catch (const config_error&) {
    throw;
  } catch (const std::exception&) {
    throw config_error(std::string("bad ") + what + ": " + std::string(s));
  }
}

}  // namespace

const std::vector<ContainerInfo>& containers() {
  static const std::vector<ContainerInfo> list = {
      {"csr", false,
       [](const GraphData& g) -> GraphContainerPtr {
         return std::make_unique<CsrGraph>(CsrGraph::build(g.n, g.arcs));
       }},
      {"csr_compressed", false,
       [](const GraphData& g) -> GraphContainerPtr {
         CsrGraph csr = CsrGraph::build(g.n, g.arcs);
         return std::make_unique<CompressedCsrGraph>(
             CompressedCsrGraph::build(csr));
       }},
      {"vector_set", true,
       [](const GraphData& g) { return build_set_graph<SortedVectorSet>(g, 0); }},
      {"vector_set_inline", true,
       [](const GraphData& g) { return build_set_graph<SortedVectorSet>(g, 10); }},
      {"tree_set", true,
       [](const GraphData& g) { return build_set_graph<OrderedTreeSet>(g, 0); }},
      {"tree_set_inline", true,
       [](const GraphData& g) { return build_set_graph<OrderedTreeSet>(g, 10); }},
      {"hash_set", true,
       [](const GraphData& g) { return build_set_graph<LinearProbeSet>(g, 0); }},
      {"hash_set_inline", true,
       [](const GraphData& g) { return build_set_graph<LinearProbeSet>(g, 10); }},
      {"chunked_set", true,
       [](const GraphData& g) { return build_set_graph<ChunkedSortedSet>(g, 0); }},
      {"chunked_set_inline", true,
       [](const GraphData& g) { return build_set_graph<ChunkedSortedSet>(g, 10); }},
  };
  return list;
}

const ContainerInfo& container_by_name(const std::string& name) {
  for (const auto& c : containers())
    if (c.name == name) return c;
  std::string known;
  for (const auto& c : containers()) known += " " + c.name;
  throw config_error("unknown container '" + name + "'; known:" + known);
}

const std::vector<AlgorithmInfo>& algorithms() {
  static const std::vector<AlgorithmInfo> list = {
      {"bfs", out_bfs},         {"bc", out_bc},
      {"spanner", out_spanner}, {"ldd", out_ldd},
      {"cc", out_cc},           {"ads", out_ads},
      {"kcore", out_kcore},     {"coloring", out_coloring},
      {"mis", out_mis},         {"pagerank", out_pagerank},
  };
  return list;
}

const AlgorithmInfo& algorithm_by_name(const std::string& name) {
  for (const auto& a : algorithms())
    if (a.name == name) return a;
  std::string known;
  for (const auto& a : algorithms()) known += " " + a.name;
  throw config_error("unknown algorithm '" + name + "'; known:" + known);
}

GraphData resolve_graph(const std::string& spec, uint64_t seed) {
  if (spec == "t4") return tiny_fixture_graph();
  if (spec.rfind("er:", 0) == 0) {
    size_t colon = spec.find(':', 3);
    if (colon == std::string::npos)
      throw config_error("graph spec: expected er:<n>:<p>");
    ErParams params;
    params.n = parse_u64(std::string_view(spec).substr(3, colon - 3), "n");
    params.p = parse_double(std::string_view(spec).substr(colon + 1), "p");
    GraphData g = generate_er(params, seed);
    g.name = spec;
    return g;
  }
  if (spec.rfind("rmat:", 0) == 0) {
    size_t colon = spec.find(':', 5);
    if (colon == std::string::npos)
      throw config_error("graph spec: expected rmat:<log2_n>:<arcs>");
    RmatParams params;
    params.log2_n =
        parse_u64(std::string_view(spec).substr(5, colon - 5), "log2_n");
    uint64_t arcs = parse_u64(std::string_view(spec).substr(colon + 1), "arcs");
    GraphData g = generate_rmat(params, arcs, seed);
    g.name = spec;
    return g;
  }
  // a file: sniff the binary magic, otherwise treat as an edge list
  std::ifstream probe(spec, std::ios::binary);
  if (!probe) throw config_error("cannot open graph file: " + spec);
  char magic[6] = {};
  probe.read(magic, 6);
  if (probe.gcount() == 6 && std::string_view(magic, 6) == "GBCSR1")
    return load_binary(spec);
  return load_edge_list(spec);
}

}  // namespace gb
