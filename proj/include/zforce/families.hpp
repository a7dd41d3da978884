#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zforce/graph.hpp"

namespace zf {

enum class Family {
  path,
  cycle,
  complete,
  complete_bipartite,
  grid,
  triangular_grid,
  king_grid,
  cycle_x_path,
  complete_x_path,
  complete_x_complete,
  cycle_x_complete,
  cycle_x_cycle,
  bouquet,
  edge_list,
};

/// A named graph family plus its integer parameters:
///   path, cycle, complete            {n}
///   complete_bipartite                {p, q}
///   grid families and products        {s, t}
///   bouquet                           {k_1, ..., k_n}, non-decreasing
///   edge_list                         {} (graph comes from a file)
struct FamilySpec {
  Family family = Family::edge_list;
  std::vector<int> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
std::vector<Family> all_families();

/// "bouquet(2,3,4)"
std::string describe(const FamilySpec& spec);

/// Throws ParameterError naming the violated hypothesis.
void validate(const FamilySpec& spec);

/// Builds the family member with its canonical labeling.
///
/// Product-like families (grid variants and X_s □ Y_t) put the vertex with
/// 1-based coordinates (i, j) at id (i-1)*t + (j-1) and label it "(i,j)";
/// i ranges over the first factor. Triangular grids add the diagonal
/// (i,j)-(i+1,j+1) to each unit square, king grids add both diagonals.
/// Bouquets place the cut-vertex "v" at id 0 followed by w_{i,1}..w_{i,k_i}
/// for each circle in order.
Graph build_family(const FamilySpec& spec);

/// G □ H with vertex (u, v) at id u*|V(H)| + v, labeled "(u+1,v+1)".
Graph cartesian_product(const Graph& g, const Graph& h);

/// The star K_{1,m} with its center joined to an end-vertex of P_n.
/// Center is id 0, leaves 1..m, path m+1..m+n.
Graph star_with_tail(int m, int n);

}  // namespace zf
