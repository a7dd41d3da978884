#include "zforce/kernel.hpp"

#include <stdexcept>

namespace zf {

GenericSystem::GenericSystem(const Graph& g) : rows_(static_cast<std::size_t>(g.vertex_count())) {
  for (int r = 0; r < g.vertex_count(); ++r) {
    auto& row = rows_[static_cast<std::size_t>(r)];
    row.push_back({r, Coefficient::arbitrary});
    g.neighbors(r).for_each([&](int c) { row.push_back({c, Coefficient::nonzero}); });
  }
}

KernelRounds generic_kernel_rounds(const Graph& g, const VertexSet& z) {
  if (z.universe_size() != g.vertex_count()) {
    throw std::invalid_argument("vertex set does not belong to this graph");
  }
  const GenericSystem sys(g);
  const auto n = static_cast<std::size_t>(sys.size());
  std::vector<char> zero(n, 0);
  z.for_each([&](int v) { zero[static_cast<std::size_t>(v)] = 1; });
  std::size_t known = static_cast<std::size_t>(z.size());

  KernelRounds out;
  for (;;) {
    std::vector<int> deduced;
    for (int r = 0; r < sys.size(); ++r) {
      const GenericSystem::Entry* unknown = nullptr;
      int unknowns = 0;
      for (const auto& e : sys.row(r)) {
        if (!zero[static_cast<std::size_t>(e.column)]) {
          ++unknowns;
          unknown = &e;
        }
      }
      if (unknowns == 1 && unknown->coefficient == GenericSystem::Coefficient::nonzero) {
        deduced.push_back(unknown->column);
      }
    }
    std::size_t fresh = 0;
    for (int v : deduced) {
      auto& slot = zero[static_cast<std::size_t>(v)];
      if (!slot) {
        slot = 1;
        ++fresh;
      }
    }
    if (fresh == 0) break;
    known += fresh;
    ++out.rounds;
  }
  out.solved = known == n;
  return out;
}

}  // namespace zf
