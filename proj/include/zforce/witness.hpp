#pragma once

#include <optional>
#include <string>

#include "zforce/families.hpp"
#include "zforce/vertex_set.hpp"

namespace zf {

/// An explicit initial black set from a known construction, already run
/// through the engine.
///
/// When `claimed_iterations` is set the set reaches V(G) in exactly that many
/// steps; when `iteration_bound` is set it does so within the bound. Sets
/// with neither are only claimed to force.
struct ProofWitness {
  VertexSet set;
  std::optional<int> claimed_iterations;
  std::optional<int> iteration_bound;
  int iterations = 0;  // what the engine measured
  std::string construction;
};

/// nullopt for families without a construction. Throws std::logic_error if a
/// construction fails its claim, and ParameterError for invalid parameters.
std::optional<ProofWitness> proof_witness(const FamilySpec& spec);

}  // namespace zf
