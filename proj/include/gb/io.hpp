#pragma once

#include <string>

#include "gb/csr.hpp"
#include "gb/graph_data.hpp"

namespace gb {

// Text edge list: one "u v" pair per line, '#' comments and blank lines
// allowed. The result is symmetrized, deduplicated, self-loop free;
// n = 1 + max id. Parse failures report the line number.
GraphData load_edge_list(const std::string& path);

void save_edge_list(const GraphData& g, const std::string& path);

// Binary CSR file: magic "GBCSR1\0\0", n and m as 64-bit little-endian,
// n+1 64-bit offsets, m 32-bit neighbor ids.
void save_binary(const CsrGraph& g, const std::string& path);

CsrGraph load_binary_csr(const std::string& path);

GraphData load_binary(const std::string& path);

}  // namespace gb
