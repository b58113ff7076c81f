#pragma once

#include "gb/graph_container.hpp"

namespace gb {

// Hides container operations behind a reduced capability set. Calls to a
// hidden operation throw, so probe tests can assert the framework never
// reaches past the mask. Masking can only disable: asking for a
// capability the wrapped container lacks is a configuration error.
class MaskedGraph final : public GraphContainer {
 public:
  MaskedGraph(GraphContainer& inner, Capabilities config)
      : inner_(inner), caps_(config) {
    if (!config.subset_of(inner.capabilities()))
      throw config_error(
          "capability mask would enable an operation the container lacks");
  }

  uint64_t num_vertices() const override { return inner_.num_vertices(); }

  void map_neighbors(VertexId i, NeighborFn f) const override {
    inner_.map_neighbors(i, f);
  }

  Capabilities capabilities() const override { return caps_; }

  uint64_t num_edges() const override {
    require(caps_.has_num_edges, "num_edges");
    return inner_.num_edges();
  }

  uint64_t degree(VertexId i) const override {
    require(caps_.has_degree, "degree");
    return inner_.degree(i);
  }

  void map_neighbors_early_exit(VertexId i, NeighborStopFn f) const override {
    require(caps_.has_map_early_exit, "map_neighbors_early_exit");
    inner_.map_neighbors_early_exit(i, f);
  }

  void parallel_map_neighbors(VertexId i, NeighborFn f) const override {
    require(caps_.has_parallel_map, "parallel_map_neighbors");
    inner_.parallel_map_neighbors(i, f);
  }

  void parallel_map_neighbors_early_exit(VertexId i,
                                         NeighborStopFn f) const override {
    require(caps_.has_parallel_map_early_exit,
            "parallel_map_neighbors_early_exit");
    inner_.parallel_map_neighbors_early_exit(i, f);
  }

  bool insert_edge(Edge e) override { return inner_.insert_edge(e); }
  bool delete_edge(Edge e) override { return inner_.delete_edge(e); }

  uint64_t insert_sorted_batch(std::span<const Edge> b) override {
    require(caps_.has_batch_updates, "insert_sorted_batch");
    return inner_.insert_sorted_batch(b);
  }

  uint64_t delete_sorted_batch(std::span<const Edge> b) override {
    require(caps_.has_batch_updates, "delete_sorted_batch");
    return inner_.delete_sorted_batch(b);
  }

  BatchForm preferred_batch_form() const override {
    return inner_.preferred_batch_form();
  }

  uint64_t memory_bytes() const override { return inner_.memory_bytes(); }

 private:
  static void require(bool present, const char* op) {
    if (!present)
      throw unsupported_operation(std::string("masked operation called: ") + op);
  }

  GraphContainer& inner_;
  Capabilities caps_;
};

inline MaskedGraph mask_capabilities(GraphContainer& g, Capabilities config) {
  return MaskedGraph(g, config);
}

}  // namespace gb
