#pragma once

#include <optional>
#include <string>

#include "gb/algorithms.hpp"
#include "gb/graph_data.hpp"

namespace gb {

// Certificate validity checks used by the verification harness. Each
// returns nullopt on success or a description of the first violation.

std::optional<std::string> check_coloring(const GraphData& g,
                                          const std::vector<uint32_t>& colors);

std::optional<std::string> check_mis(const GraphData& g,
                                     const std::vector<uint8_t>& in_set);

// Labels must partition the vertices into nonempty clusters, each
// connected and containing its own center.
std::optional<std::string> check_ldd(const GraphData& g,
                                     const std::vector<VertexId>& labels);

// The spanner must preserve the connectivity partition of g.
std::optional<std::string> check_spanner(const GraphData& g,
                                         const std::vector<Edge>& arcs);

std::optional<std::string> check_ads(const GraphData& g,
                                     const AdsResult& result);

std::optional<std::string> check_cc(const GraphData& g,
                                    const std::vector<VertexId>& labels);

}  // namespace gb
