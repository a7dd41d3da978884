#include "zforce/path_cover.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace zf {

int path_cover_number(const Graph& g, int limit) {
  const int n = g.vertex_count();
  if (n > limit || n > 24) {
    throw std::length_error("path cover search is limited to " + std::to_string(limit) +
                            " vertices; graph has " + std::to_string(n));
  }
  if (n == 0) return 0;

  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    g.neighbors(v).for_each([&](int w) { nbr[static_cast<std::size_t>(v)] |= 1u << w; });
  }

  // ends[S]: vertices at which some Hamiltonian path of <S> can end.
  std::vector<std::uint32_t> ends(std::size_t{full} + 1, 0);
  for (int v = 0; v < n; ++v) ends[1u << v] = 1u << v;
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::uint32_t e = ends[s];
    while (e) {
      const int v = __builtin_ctz(e);
      e &= e - 1;
      std::uint32_t ext = nbr[static_cast<std::size_t>(v)] & ~s;
      while (ext) {
        const int w = __builtin_ctz(ext);
        ext &= ext - 1;
        ends[s | (1u << w)] |= 1u << w;
      }
    }
  }

  // cover[S]: fewest paths partitioning S. The part holding S's lowest
  // vertex is chosen explicitly, so each partition is counted once.
  std::vector<std::uint8_t> cover(std::size_t{full} + 1, 0xff);
  cover[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (~s + 1);
    const std::uint32_t rest = s ^ low;
    int best = 0xff;
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t part = sub | low;
      if (ends[part]) best = std::min(best, 1 + cover[s ^ part]);
      if (sub == 0) break;
    }
    cover[s] = static_cast<std::uint8_t>(best);
  }
  return cover[full];
}

}  // namespace zf
