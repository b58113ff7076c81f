#pragma once

#include "gb/facade.hpp"
#include "gb/function_ref.hpp"
#include "gb/vertex_subset.hpp"

namespace gb {

enum class EdgeMapMode { Sparse, Dense };

// The work a frontier represents: its cardinality plus the sum of its
// out-degrees (served by the container's degree() or, when that is
// masked, the counting-map fallback). Drives the sparse/dense switch.
struct FrontierWork {
  uint64_t size = 0;
  uint64_t out_degree_sum = 0;
  uint64_t total() const { return size + out_degree_sum; }
};

FrontierWork frontier_work(const GraphView& g, const VertexSubset& frontier);

// update(src, dst) -> emit dst into the output frontier. cond(dst) ->
// dst still eligible. In sparse (push) mode the engine claims dst before
// invoking update, so update runs at most once per destination; in dense
// (pull) mode update may run once per eligible frontier neighbor, which
// is where accumulating updates belong.
struct EdgeMapSpec {
  function_ref<bool(VertexId, VertexId)> update;
  function_ref<bool(VertexId)> cond;
  bool allow_dense_early_exit = true;
  double threshold_fraction = 1.0 / 20.0;
  EdgeMapMode* mode_out = nullptr;  // records the chosen mode when set
};

// Push-based: map over the frontier's out-neighbors, claim-then-update.
// Output is sparse and sorted.
VertexSubset edge_map_sparse(const GraphView& g, const VertexSubset& frontier,
                             const EdgeMapSpec& spec);

// Pull-based: scan every vertex passing cond against the frontier bits.
// Early exit (when allowed and available) stops a vertex's scan once it
// is emitted or its cond turns false. Output is dense.
VertexSubset edge_map_dense(const GraphView& g, const VertexSubset& frontier,
                            const EdgeMapSpec& spec);

// Direction-optimizing dispatch: dense iff
//   |frontier| + sum of frontier degrees > threshold_fraction * m.
VertexSubset edge_map(const GraphView& g, const VertexSubset& frontier,
                      const EdgeMapSpec& spec);

// Applies f once per member.
void vertex_map(const VertexSubset& s, function_ref<void(VertexId)> f);

// Members satisfying pred, in the input's representation.
VertexSubset vertex_filter(const VertexSubset& s,
                           function_ref<bool(VertexId)> pred);

}  // namespace gb
