#pragma once

#include "zforce/graph.hpp"

namespace zf {

inline constexpr int kDefaultPathCoverLimit = 16;

/// Minimum number of vertex-disjoint paths covering V(G).
///
/// Exact: Hamiltonian-path reachability over all vertex subsets, then a
/// minimum partition into path-coverable subsets. Exponential; graphs with
/// more than `limit` vertices throw std::length_error.
int path_cover_number(const Graph& g, int limit = kDefaultPathCoverLimit);

}  // namespace zf
