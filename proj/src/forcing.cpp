#include "zforce/forcing.hpp"

#include <stdexcept>

namespace zf {

VertexSet color_change_step(const Graph& g, const VertexSet& black) {
  if (black.universe_size() != g.vertex_count()) {
    throw std::invalid_argument("vertex set does not belong to this graph");
  }
  VertexSet next = black;
  black.for_each([&](int u) {
    VertexSet white = g.neighbors(u) - black;
    if (white.size() == 1) next |= white;
  });
  return next;
}

ForcingTrace run_forcing(const Graph& g, const VertexSet& z) {
  ForcingTrace trace;
  trace.layers.push_back(z);
  for (;;) {
    VertexSet next = color_change_step(g, trace.layers.back());
    if (next == trace.layers.back()) break;
    trace.derived.push_back(next - trace.layers.back());
    trace.layers.push_back(std::move(next));
  }
  trace.success = trace.final_set().is_full();
  return trace;
}

std::vector<int> ForcingTrace::first_black_step() const {
  std::vector<int> step(static_cast<std::size_t>(initial().universe_size()), -1);
  initial().for_each([&](int v) { step[static_cast<std::size_t>(v)] = 0; });
  for (std::size_t i = 0; i < derived.size(); ++i) {
    derived[i].for_each([&](int v) { step[static_cast<std::size_t>(v)] = static_cast<int>(i + 1); });
  }
  return step;
}

VertexSet closure(const Graph& g, const VertexSet& z) {
  // One force at a time; the fixpoint does not depend on the order.
  VertexSet black = z;
  bool progress = true;
  while (progress) {
    progress = false;
    black.for_each([&](int u) {
      VertexSet white = g.neighbors(u) - black;
      if (white.size() == 1) {
        black |= white;
        progress = true;
      }
    });
  }
  return black;
}

bool is_zero_forcing_set(const Graph& g, const VertexSet& z) {
  return closure(g, z).is_full();
}

}  // namespace zf
