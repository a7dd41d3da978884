#pragma once

#include <optional>
#include <vector>

#include "zforce/graph.hpp"
#include "zforce/search.hpp"

namespace zf {

/// Structural bounds every exact (Z, I) pair must satisfy.
///
/// For a graph with at least one edge: max{|V|/Z - 1, 1} <= I <= |V| - Z,
/// with the left side compared exactly (|V| <= (I+1)·Z). Always: δ <= Z,
/// and P <= Z when the path cover number is supplied.
struct BoundsReport {
  int vertices = 0;
  int z = 0;
  int i = 0;
  int min_degree = 0;
  std::optional<int> path_cover;
  bool has_edge = false;
  int i_lower = 0;  // smallest integer meeting the lower bound
  int i_upper = 0;
  bool i_lower_ok = true;
  bool i_upper_ok = true;
  bool degree_ok = true;
  bool path_cover_ok = true;

  bool satisfied() const { return i_lower_ok && i_upper_ok && degree_ok && path_cover_ok; }
};

BoundsReport evaluate_bounds(const Graph& g, int z, int i,
                             std::optional<int> path_cover = std::nullopt);

/// evaluate_bounds, throwing std::logic_error when a bound fails. A failure
/// means the solver itself is wrong.
BoundsReport check_bounds(const Graph& g, int z, int i,
                          std::optional<int> path_cover = std::nullopt);

struct PerturbationRow {
  enum class Kind { vertex, edge };
  Kind kind = Kind::vertex;
  int u = 0;
  int v = -1;  // second endpoint for edges
  int z_after = 0;
  bool ok = true;  // Z - 1 <= z_after <= Z + 1
};

struct PerturbationReport {
  int z = 0;
  std::vector<PerturbationRow> rows;
  bool all_ok() const;
};

/// Z(G - v) for every vertex and Z(G - e) for every edge, each checked to lie
/// within one of Z(G).
PerturbationReport perturbation_check(const Graph& g, const SearchOptions& opts = {});

/// Z(G □ H) <= min{Z(G)·|V(H)|, Z(H)·|V(G)|}.
struct ProductBound {
  int z_product = 0;
  long long bound = 0;
  bool ok = true;
};

ProductBound product_bound(int z_product, int z_g, int n_g, int z_h, int n_h);
ProductBound check_product_bound(const Graph& g, const Graph& h, const SearchOptions& opts = {});

}  // namespace zf
