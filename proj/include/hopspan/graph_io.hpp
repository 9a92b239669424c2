#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hopspan/graph.hpp"

namespace hopspan {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Edge-list text: one `u v [w]` per line, `#` starts a comment, missing
// weight means 1. The vertex count is 1 + the largest id seen unless a
// `# n=<count>` line fixes it (so isolated trailing vertices survive).
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);

// Shortest round-trip decimal form of a weight ("1", "2.5", ...).
std::string format_weight(Weight w);

}  // namespace hopspan
