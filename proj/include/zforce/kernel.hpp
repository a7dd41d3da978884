#pragma once

#include <vector>

#include "zforce/graph.hpp"
#include "zforce/vertex_set.hpp"

namespace zf {

/// Sparsity pattern of a generic symmetric matrix A with graph G: off-diagonal
/// entries are nonzero exactly on edges, diagonal entries are arbitrary.
/// Only the pattern is modeled; no field arithmetic is performed.
class GenericSystem {
 public:
  enum class Coefficient { arbitrary, nonzero };
  struct Entry {
    int column;
    Coefficient coefficient;
  };

  explicit GenericSystem(const Graph& g);

  int size() const { return static_cast<int>(rows_.size()); }
  const std::vector<Entry>& row(int r) const { return rows_.at(static_cast<std::size_t>(r)); }

 private:
  std::vector<std::vector<Entry>> rows_;
};

struct KernelRounds {
  int rounds = 0;
  bool solved = false;
};

/// Naive substitution on A x = 0 starting from x_v = 0 for v in z.
///
/// Each round, every equation whose only unknown is a variable with a
/// guaranteed-nonzero coefficient pins that variable to zero; all such
/// deductions of a round are applied together. `rounds` counts rounds that
/// deduced something; `solved` means every variable was pinned.
KernelRounds generic_kernel_rounds(const Graph& g, const VertexSet& z);

}  // namespace zf
