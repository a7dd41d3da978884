#pragma once

#include <vector>

#include "zforce/graph.hpp"
#include "zforce/vertex_set.hpp"

namespace zf {

/// One global application of the color-change rule: every white vertex that
/// is the unique white neighbor of some black vertex turns black, all at once.
VertexSet color_change_step(const Graph& g, const VertexSet& black);

/// The sequence Z_0 ⊂ Z_1 ⊂ ... ⊂ Z_m of global steps up to the fixpoint.
struct ForcingTrace {
  std::vector<VertexSet> layers;   // layers[0] is the initial set
  std::vector<VertexSet> derived;  // derived[i-1] = layers[i] - layers[i-1]
  bool success = false;            // fixpoint is all of V(G)

  const VertexSet& initial() const { return layers.front(); }
  const VertexSet& final_set() const { return layers.back(); }
  /// Number of strict-growth steps; the iteration index I_Z(G) on success.
  int iterations() const { return static_cast<int>(derived.size()); }
  /// For each vertex, the first m with v in Z_m, or -1 if it never turns black.
  std::vector<int> first_black_step() const;
  VertexSet white_remainder() const { return final_set().complement(); }
};

ForcingTrace run_forcing(const Graph& g, const VertexSet& z);

/// Fixpoint of the color-change rule from `z`.
VertexSet closure(const Graph& g, const VertexSet& z);
bool is_zero_forcing_set(const Graph& g, const VertexSet& z);

}  // namespace zf
