#pragma once

#include <cstdint>
#include <vector>

#include "zforce/graph.hpp"
#include "zforce/vertex_set.hpp"

namespace zf {

inline constexpr unsigned long long kDefaultClosureBudget = 1ull << 31;

struct SearchOptions {
  /// Maximum closure evaluations per request. A size level whose worst case
  /// would overrun the budget is refused before it starts.
  unsigned long long budget = kDefaultClosureBudget;
  /// Worker threads for the subset enumeration. Results do not depend on it.
  int workers = 1;
  /// Solve each connected component separately and combine.
  bool split_components = true;
};

/// Exact zero forcing number with the least (as a bit pattern) minimum
/// zero forcing set. `closures` is the count a serial search performs.
struct ZeroForcingResult {
  int z = 0;
  VertexSet witness;
  unsigned long long closures = 0;
};

/// Z(G), every Z(G)-set, and the iteration index I(G).
struct SolveResult {
  int z = 0;
  int i = 0;
  VertexSet zfs_witness;  // least Z(G)-set
  VertexSet ii_witness;   // least Z(G)-set with I_Z(G) = I(G)
  unsigned long long num_minimum_zfs = 0;
  unsigned long long closures = 0;
  int components = 0;
};

/// Sizes are tried from the minimum degree upward, subsets of one size in
/// ascending bit order; the first size with a forcing subset is Z(G).
/// Throws BudgetExceeded.
ZeroForcingResult zero_forcing_number(const Graph& g, const SearchOptions& opts = {});

SolveResult solve(const Graph& g, const SearchOptions& opts = {});

/// All Z(G)-sets in ascending bit order.
std::vector<VertexSet> all_minimum_zfs(const Graph& g, const SearchOptions& opts = {});

struct IterationIndexResult {
  int i = 0;
  VertexSet witness;
};

IterationIndexResult iteration_index(const Graph& g, const SearchOptions& opts = {});

/// Iterations of the synchronous rule from `z`, or -1 if z does not force.
/// Uses the single-word kernel when possible.
int forcing_iterations(const Graph& g, const VertexSet& z);

/// C(n, k), saturating at the maximum of unsigned long long.
unsigned long long binomial(int n, int k);

}  // namespace zf
