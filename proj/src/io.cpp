#include "gb/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

namespace gb {

namespace {

constexpr std::array<char, 8> kMagic = {'G', 'B', 'C', 'S', 'R', '1',
                                        '\0', '\0'};

void put_u64(std::ostream& out, uint64_t x) {
  std::array<unsigned char, 8> b;
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(x >> (8 * i));
  out.write(reinterpret_cast<const char*>(b.data()), 8);
}

void put_u32(std::ostream& out, uint32_t x) {
  std::array<unsigned char, 4> b;
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(x >> (8 * i));
  out.write(reinterpret_cast<const char*>(b.data()), 4);
}

uint64_t get_u64(std::istream& in) {
  std::array<unsigned char, 8> b;
  in.read(reinterpret_cast<char*>(b.data()), 8);
  if (!in) throw format_error("binary graph: truncated file");
  uint64_t x = 0;
  for (int i = 0; i < 8; ++i) x |= static_cast<uint64_t>(b[i]) << (8 * i);
  return x;
}

uint32_t get_u32(std::istream& in) {
  std::array<unsigned char, 4> b;
  in.read(reinterpret_cast<char*>(b.data()), 4);
  if (!in) throw format_error("binary graph: truncated file");
  uint32_t x = 0;
  for (int i = 0; i < 4; ++i) x |= static_cast<uint32_t>(b[i]) << (8 * i);
  return x;
}

}  // namespace

GraphData load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw format_error("cannot open edge list: " + path);
  std::vector<Edge> raw;
  std::string line;
  uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    uint64_t u, v;
    if (!(fields >> u >> v) || u > UINT32_MAX - 2 || v > UINT32_MAX - 2)
      throw format_error(path + ":" + std::to_string(line_no) +
                         ": expected 'u v'");
    raw.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  GraphData g = normalize_arcs(std::move(raw), 0, path);
  return g;
}

void save_edge_list(const GraphData& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw format_error("cannot write edge list: " + path);
  for (const Edge& e : g.arcs)
    if (e.src < e.dst) out << e.src << ' ' << e.dst << '\n';
}

void save_binary(const CsrGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw format_error("cannot write binary graph: " + path);
  out.write(kMagic.data(), kMagic.size());
  uint64_t n = g.num_vertices();
  put_u64(out, n);
  put_u64(out, g.num_edges());
  for (uint64_t off : g.offsets()) put_u64(out, off);
  for (VertexId v : g.neighbors()) put_u32(out, v);
  if (!out) throw format_error("write failed: " + path);
}

CsrGraph load_binary_csr(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw format_error("cannot open binary graph: " + path);
  std::array<char, 8> magic;
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic)
    throw format_error("binary graph: bad magic: " + path);
  uint64_t n = get_u64(in);
  uint64_t m = get_u64(in);
  std::vector<uint64_t> offsets(n + 1);
  for (uint64_t i = 0; i <= n; ++i) {
    offsets[i] = get_u64(in);
    if (i > 0 && offsets[i] < offsets[i - 1])
      throw format_error("binary graph: offsets not monotone");
  }
  if (offsets[0] != 0 || offsets[n] != m)
    throw format_error("binary graph: offsets disagree with edge count");
  std::vector<Edge> arcs;
  arcs.reserve(m);
  for (uint64_t i = 0; i < n; ++i) {
    for (uint64_t k = offsets[i]; k < offsets[i + 1]; ++k) {
      uint32_t v = get_u32(in);
      if (v >= n) throw format_error("binary graph: neighbor out of range");
      arcs.push_back({static_cast<VertexId>(i), v});
    }
  }
  return CsrGraph::build(n, arcs);
}

GraphData load_binary(const std::string& path) {
  CsrGraph csr = load_binary_csr(path);
  GraphData g;
  g.n = csr.num_vertices();
  g.arcs.reserve(csr.num_edges());
  for (uint64_t i = 0; i < g.n; ++i)
    for (VertexId v : csr.neighbor_segment(static_cast<VertexId>(i)))
      g.arcs.push_back({static_cast<VertexId>(i), v});
  g.name = path;
  return g;
}

}  // namespace gb
