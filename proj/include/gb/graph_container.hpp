#pragma once

#include <cstdint>
#include <memory>
#include <span>

#include "gb/capabilities.hpp"
#include "gb/function_ref.hpp"
#include "gb/types.hpp"

namespace gb {

enum class BatchForm { GlobalSort, SemiSort, SemiSortLocalSort };

inline const char* batch_form_name(BatchForm f) {
  switch (f) {
    case BatchForm::GlobalSort: return "global_sort";
    case BatchForm::SemiSort: return "semi_sort";
    case BatchForm::SemiSortLocalSort: return "semi_sort_local_sort";
  }
  return "?";
}

using NeighborFn = function_ref<void(VertexId)>;
// Returning true stops the scan (early-exit maps only).
using NeighborStopFn = function_ref<bool(VertexId)>;

// Whole-graph container contract. map_neighbors and num_vertices are
// mandatory; everything else is optional and advertised through
// capabilities(). The framework must not call an operation whose
// capability flag is off — it has fallbacks for all of them.
//
// Concurrency: all read operations may be called from many threads at
// once. Updates are phased; no reads are in flight while insert/delete
// entry points run.
class GraphContainer {
 public:
  virtual ~GraphContainer() = default;

  virtual uint64_t num_vertices() const = 0;
  virtual void map_neighbors(VertexId i, NeighborFn f) const = 0;

  virtual Capabilities capabilities() const = 0;

  virtual uint64_t num_edges() const {
    throw unsupported_operation("num_edges not provided");
  }
  virtual uint64_t degree(VertexId) const {
    throw unsupported_operation("degree not provided");
  }
  virtual void map_neighbors_early_exit(VertexId, NeighborStopFn) const {
    throw unsupported_operation("map_neighbors_early_exit not provided");
  }
  virtual void parallel_map_neighbors(VertexId, NeighborFn) const {
    throw unsupported_operation("parallel_map_neighbors not provided");
  }
  virtual void parallel_map_neighbors_early_exit(VertexId,
                                                 NeighborStopFn) const {
    throw unsupported_operation("parallel_map_neighbors_early_exit not provided");
  }

  // Single-arc updates. Return whether the container changed (false for
  // duplicate inserts / absent deletes).
  virtual bool insert_edge(Edge) {
    throw unsupported_operation("container is static: insert not supported");
  }
  virtual bool delete_edge(Edge) {
    throw unsupported_operation("container is static: delete not supported");
  }

  // Batch entry points; input must be in preferred_batch_form(). Return
  // the number of arcs that actually changed the container.
  virtual uint64_t insert_sorted_batch(std::span<const Edge>) {
    throw unsupported_operation("container is static: batch insert not supported");
  }
  virtual uint64_t delete_sorted_batch(std::span<const Edge>) {
    throw unsupported_operation("container is static: batch delete not supported");
  }

  virtual BatchForm preferred_batch_form() const {
    return BatchForm::GlobalSort;
  }

  // Heap footprint of the topology, for bytes-per-edge reporting.
  // 0 means the container cannot account for itself.
  virtual uint64_t memory_bytes() const { return 0; }
};

using GraphContainerPtr = std::unique_ptr<GraphContainer>;

}  // namespace gb
