#pragma once

#include <cstdint>
#include <vector>

#include "gb/types.hpp"

namespace gb {

// Framework-side degree and edge-count bookkeeping for containers that do
// not track it themselves. Updated on every applied insert/delete, so it
// always mirrors the container's true structure.
class MetadataTracker {
 public:
  MetadataTracker() = default;
  explicit MetadataTracker(uint64_t n) : degrees_(n, 0) {}

  enum class Kind { Insert, Delete };

  // `applied` reports whether the container actually changed (duplicate
  // insert / missing delete mean false). No-op when it did not.
  void on_update(Edge e, Kind kind, bool applied) {
    if (!applied) return;
    if (kind == Kind::Insert) {
      degrees_[e.src] += 1;
      total_edges_ += 1;
    } else {
      if (degrees_[e.src] == 0 || total_edges_ == 0)
        throw std::logic_error(
            "metadata underflow: tracker and container diverged");
      degrees_[e.src] -= 1;
      total_edges_ -= 1;
    }
  }

  // Bulk adjustments for phased batch application. The caller guarantees
  // exclusive access to vertex i's cell (updates are partitioned by source).
  void add_degree(VertexId i, int64_t delta) {
    if (delta < 0 && degrees_[i] < static_cast<uint64_t>(-delta))
      throw std::logic_error(
          "metadata underflow: tracker and container diverged");
    degrees_[i] = static_cast<uint64_t>(static_cast<int64_t>(degrees_[i]) + delta);
  }

  void add_total(int64_t delta) {
    if (delta < 0 && total_edges_ < static_cast<uint64_t>(-delta))
      throw std::logic_error(
          "metadata underflow: tracker and container diverged");
    total_edges_ = static_cast<uint64_t>(static_cast<int64_t>(total_edges_) + delta);
  }

  uint64_t degree(VertexId i) const { return degrees_[i]; }
  uint64_t total_edges() const { return total_edges_; }
  uint64_t num_vertices() const { return degrees_.size(); }

 private:
  std::vector<uint64_t> degrees_;
  uint64_t total_edges_ = 0;
};

}  // namespace gb
