#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "gb/types.hpp"

namespace gb {

// Which optional container operations are present. map_neighbors and
// num_vertices are always required and carry no flag.
struct Capabilities {
  bool has_num_edges = false;
  bool has_degree = false;
  bool has_map_early_exit = false;
  bool has_parallel_map = false;
  bool has_parallel_map_early_exit = false;
  bool has_batch_updates = false;

  friend bool operator==(const Capabilities&, const Capabilities&) = default;

  static Capabilities all() {
    return {true, true, true, true, true, true};
  }
  static Capabilities none() { return {}; }

  // True iff every capability enabled here is also enabled in `avail`.
  bool subset_of(const Capabilities& avail) const {
    return (!has_num_edges || avail.has_num_edges) &&
           (!has_degree || avail.has_degree) &&
           (!has_map_early_exit || avail.has_map_early_exit) &&
           (!has_parallel_map || avail.has_parallel_map) &&
           (!has_parallel_map_early_exit ||
            avail.has_parallel_map_early_exit) &&
           (!has_batch_updates || avail.has_batch_updates);
  }

  Capabilities intersect(const Capabilities& other) const {
    return {has_num_edges && other.has_num_edges,
            has_degree && other.has_degree,
            has_map_early_exit && other.has_map_early_exit,
            has_parallel_map && other.has_parallel_map,
            has_parallel_map_early_exit && other.has_parallel_map_early_exit,
            has_batch_updates && other.has_batch_updates};
  }
};

// The nine read-API configurations the ablation sweep measures, from the
// bare required pair up to everything. Update entry points are not part
// of the read API and are never masked, so has_batch_updates stays off
// here (the harness intersects with the container's own capabilities).
struct ApiConfig {
  std::string_view name;
  Capabilities caps;
};

inline const std::vector<ApiConfig>& api_configs() {
  static const std::vector<ApiConfig> configs = {
      {"min", Capabilities{false, false, false, false, false, false}},
      {"min_degree", Capabilities{false, true, false, false, false, false}},
      {"min_efficient", Capabilities{true, true, false, false, false, false}},
      {"no_num_edges", Capabilities{false, true, true, true, true, false}},
      {"no_degree", Capabilities{true, false, true, true, true, false}},
      {"no_early_exit", Capabilities{true, true, false, true, false, false}},
      {"no_parallel_map", Capabilities{true, true, true, false, false, false}},
      {"no_parallel_early_exit",
       Capabilities{true, true, true, true, false, false}},
      {"full", Capabilities{true, true, true, true, true, false}},
  };
  return configs;
}

inline Capabilities api_config_by_name(std::string_view name) {
  for (const auto& c : api_configs())
    if (c.name == name) return c.caps;
  throw config_error("unknown API config: " + std::string(name));
}

}  // namespace gb
