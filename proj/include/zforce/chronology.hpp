#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

#include "zforce/graph.hpp"
#include "zforce/vertex_set.hpp"

namespace zf {

inline constexpr std::size_t kDefaultListCap = 1'000'000;

/// u -> w: black u turns its only white neighbor w black.
struct Force {
  int source = 0;
  int target = 0;
  friend auto operator<=>(const Force&, const Force&) = default;
};

/// Forces applied one at a time from `initial` until every vertex is black.
struct ChronologicalList {
  VertexSet initial;
  std::vector<Force> forces;
};

/// Checks that every force is legal at its position and that the list ends
/// with all vertices black.
bool is_valid_list(const Graph& g, const ChronologicalList& list);

struct ListEnumeration {
  std::vector<ChronologicalList> lists;
  bool truncated = false;
};

/// The chronological lists that follow the global color-change steps: every
/// w in D^i is forced by some u in Z_{i-1} whose only white neighbor with
/// respect to Z_{i-1} is w. Lists differ only in which such u is chosen.
/// Forces appear step by step, targets ascending within a step, and lists
/// come in lexicographic order of the forcer choices (smallest first).
/// Stops after `cap` lists and sets `truncated` if more exist.
/// Throws NotForcingError when z is not a zero forcing set.
ListEnumeration enumerate_chronological_lists(const Graph& g, const VertexSet& z,
                                              std::size_t cap = kDefaultListCap);

/// The first list in enumeration order.
ChronologicalList canonical_list(const Graph& g, const VertexSet& z);

/// Number of step-following lists, saturating at the maximum of unsigned long long.
unsigned long long count_chronological_lists(const Graph& g, const VertexSet& z);

/// u_1 -> u_2 -> ... -> u_t. length() counts forces, not vertices.
struct ForcingChain {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
  friend bool operator==(const ForcingChain&, const ForcingChain&) = default;
};

/// One maximal chain per initial vertex, in ascending order of the start
/// vertex. An initial vertex that never forces is a chain of length 0.
std::vector<ForcingChain> extract_maximal_chains(const ChronologicalList& list);

/// Last vertices of the maximal chains; always the same size as the initial set.
VertexSet reversal(const ChronologicalList& list);

struct LlfcResult {
  int min_longest = 0;  // min over lists of the longest chain length
  int max_longest = 0;  // max over lists of the longest chain length
  unsigned long long lists = 0;
};

/// Longest-forcing-chain length aggregated over every step-following list.
/// Exact without enumeration: the chain ending at w is one longer than the
/// chain ending at its forcer, so both extremes follow step by step.
LlfcResult llfc(const Graph& g, const VertexSet& z);

}  // namespace zf
