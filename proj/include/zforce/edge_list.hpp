#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zforce/graph.hpp"

namespace zf {

// Plain-text edge lists:
//
//   n m
//   u v      (m lines, 0 <= u < v < n, whitespace separated)
//
// Serialization sorts edges lexicographically, so serialize(parse(x)) is a
// canonical form of x.

struct ParsedGraph {
  Graph graph;
  std::vector<std::string> warnings;
};

/// Throws ParseError on a malformed header or edge line, an endpoint >= n,
/// a self-loop, or an edge count that disagrees with the header. Duplicate
/// edges and reversed pairs (u > v) are accepted with a warning.
ParsedGraph parse_edge_list(std::string_view text);
ParsedGraph read_edge_list_file(const std::string& path);

std::string serialize_edge_list(const Graph& g);

}  // namespace zf
