#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "zforce/graph.hpp"
#include "zforce/vertex_set.hpp"

namespace zf {

/// Comma-separated members, each a 0-based id or a vertex label such as
/// "(2,3)" or "w_{1,2}". Commas inside () or {} belong to the label.
/// Optional surrounding braces are accepted. Throws ParameterError.
VertexSet parse_vertex_set(const Graph& g, std::string_view text);

/// "a..b" or a single "a"; requires a <= b. Throws ParameterError.
std::pair<int, int> parse_range(std::string_view text);

/// "2,3,4". Throws ParameterError.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace zf
