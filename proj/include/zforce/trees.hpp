#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zforce/chronology.hpp"
#include "zforce/graph.hpp"

namespace zf {

/// One representative per isomorphism class of trees on n vertices, built by
/// growing leaves and deduplicating on a center-rooted canonical encoding.
/// Practical for n up to about 14.
std::vector<Graph> free_trees(int n);

/// Center-rooted parenthesis encoding; equal exactly for isomorphic trees.
std::string tree_canonical_form(const Graph& tree);

/// A tree whose minimum zero forcing sets all have forcing chains strictly
/// shorter than their iteration count.
struct ChainGapCriteria {
  int z = 3;
  unsigned long long num_minimum_zfs = 10;
  int i = 3;
  int llfc = 2;  // required for both min and max aggregation over lists
};

/// All trees on n vertices (one per isomorphism class) meeting the criteria.
std::vector<Graph> find_chain_gap_trees(int n, const ChainGapCriteria& criteria);

/// A permutation p (vertex v becomes p[v]) taking the set family `from`
/// exactly onto `to`, if one exists. Both families live on the same n.
std::optional<std::vector<int>> find_relabeling(const std::vector<VertexSet>& from,
                                                const std::vector<VertexSet>& to);

Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace zf
