#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace gb {

using VertexId = uint32_t;

inline constexpr VertexId kNoVertex = UINT32_MAX;
inline constexpr uint64_t kInfiniteDistance = UINT64_MAX;

// A directed arc. Undirected edges are stored as two arcs (u,v) and (v,u);
// symmetry is maintained by the ingestion paths, not by the containers.
struct Edge {
  VertexId src = 0;
  VertexId dst = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge& a, const Edge& b) {
    return std::tie(a.src, a.dst) <=> std::tie(b.src, b.dst);
  }
};

// n vertices, m directed arcs (each undirected edge counted twice).
struct GraphStats {
  uint64_t n = 0;
  uint64_t m = 0;

  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

// Raw update stream as received: may contain duplicates and self-loops.
struct EdgeBatch {
  std::vector<Edge> updates;

  size_t size() const { return updates.size(); }
};

// Thrown when a container does not implement an operation (e.g. updates on
// a static container).
class unsupported_operation : public std::logic_error {
 public:
  explicit unsupported_operation(const std::string& what)
      : std::logic_error(what) {}
};

// Bad harness configuration: unknown names, masks that try to enable
// capabilities a container lacks, malformed prepared batches.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed external input: files, byte streams, unsorted CSR input.
class format_error : public std::runtime_error {
 public:
  explicit format_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gb
