#pragma once

#include <cstdint>
#include <vector>

#include "gb/graph_container.hpp"
#include "gb/types.hpp"

namespace gb {

// A normalized update batch: self-loop free and deduplicated, with its
// arcs arranged in one of the three forms containers consume.
//   GlobalSort        arcs sorted by (src, dst)
//   SemiSort          equal sources contiguous, inner order as received
//   SemiSortLocalSort sources contiguous, destinations sorted per source
// Sources are grouped in all three, so `groups` is populated for the semi
// sorted forms and implicit for GlobalSort.
struct PreparedBatch {
  BatchForm form = BatchForm::GlobalSort;
  std::vector<Edge> arcs;
  struct Group {
    VertexId src;
    size_t begin;
    size_t end;
  };
  std::vector<Group> groups;
};

// Normalizes a raw batch into the requested form. Self-loops are dropped;
// duplicates are removed keeping the first occurrence. Deterministic in
// the input order.
PreparedBatch prepare(const EdgeBatch& batch, BatchForm form);

// Checks that the arcs actually satisfy the declared form's ordering
// invariants; throws config_error otherwise.
void validate_prepared(const PreparedBatch& pb);

// Routes a prepared batch into the container's batch entry point,
// re-preparing it first when the container needs a stronger form (the
// framework owns sorting, not the container). Returns the applied count.
uint64_t apply_insert(GraphContainer& g, const PreparedBatch& pb);
uint64_t apply_delete(GraphContainer& g, const PreparedBatch& pb);

struct RmatParams {
  double a = 0.5;
  double b = 0.1;
  double c = 0.1;
  uint64_t log2_n = 14;
  // d = 1 - a - b - c
};

// `size` directed arcs sampled from the recursive-quadrant generator
// (duplicates and self-loops possible, as sampled), each followed by its
// reverse arc so the batch applies symmetrically.
EdgeBatch generate_update_batch(const RmatParams& params, uint64_t size,
                                uint64_t seed);

}  // namespace gb
