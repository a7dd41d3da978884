#include "zforce/chronology.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "zforce/errors.hpp"
#include "zforce/forcing.hpp"

namespace zf {
namespace {

// For each global step, the targets of D^i in ascending order, each with the
// vertices of Z_{i-1} that may force it.
struct StepChoices {
  std::vector<int> targets;
  std::vector<std::vector<int>> forcers;
};

std::vector<StepChoices> step_choices(const Graph& g, const VertexSet& z) {
  std::vector<StepChoices> steps;
  VertexSet black = z;
  while (true) {
    StepChoices step;
    std::vector<std::vector<int>> by_target(static_cast<std::size_t>(g.vertex_count()));
    black.for_each([&](int u) {
      VertexSet white = g.neighbors(u) - black;
      if (white.size() == 1) by_target[static_cast<std::size_t>(white.members().front())].push_back(u);
    });
    for (int w = 0; w < g.vertex_count(); ++w) {
      auto& f = by_target[static_cast<std::size_t>(w)];
      if (f.empty()) continue;
      step.targets.push_back(w);
      step.forcers.push_back(std::move(f));
    }
    if (step.targets.empty()) break;
    for (int w : step.targets) black.insert(w);
    steps.push_back(std::move(step));
  }
  return steps;
}

void require_forcing(const Graph& g, const VertexSet& z) {
  if (z.universe_size() != g.vertex_count()) {
    throw std::invalid_argument("vertex set does not belong to this graph");
  }
  if (!is_zero_forcing_set(g, z)) {
    throw NotForcingError(z.to_string() + " is not a zero forcing set");
  }
}

}  // namespace

bool is_valid_list(const Graph& g, const ChronologicalList& list) {
  if (list.initial.universe_size() != g.vertex_count()) return false;
  VertexSet black = list.initial;
  for (const Force& f : list.forces) {
    if (f.source < 0 || f.source >= g.vertex_count()) return false;
    if (f.target < 0 || f.target >= g.vertex_count()) return false;
    if (!black.contains(f.source) || black.contains(f.target)) return false;
    VertexSet white = g.neighbors(f.source) - black;
    if (white.size() != 1 || !white.contains(f.target)) return false;
    black.insert(f.target);
  }
  return black.is_full();
}

ListEnumeration enumerate_chronological_lists(const Graph& g, const VertexSet& z,
                                              std::size_t cap) {
  require_forcing(g, z);
  const auto steps = step_choices(g, z);
  std::vector<std::pair<int, const std::vector<int>*>> slots;
  for (const auto& st : steps)
    for (std::size_t k = 0; k < st.targets.size(); ++k) slots.emplace_back(st.targets[k], &st.forcers[k]);

  ListEnumeration out;
  std::vector<Force> path;
  path.reserve(slots.size());
  std::function<bool(std::size_t)> walk = [&](std::size_t k) -> bool {
    if (k == slots.size()) {
      if (out.lists.size() == cap) {
        out.truncated = true;
        return false;
      }
      out.lists.push_back({z, path});
      return true;
    }
    for (int u : *slots[k].second) {
      path.push_back({u, slots[k].first});
      const bool more = walk(k + 1);
      path.pop_back();
      if (!more) return false;
    }
    return true;
  };
  walk(0);
  return out;
}

ChronologicalList canonical_list(const Graph& g, const VertexSet& z) {
  return enumerate_chronological_lists(g, z, 1).lists.front();
}

unsigned long long count_chronological_lists(const Graph& g, const VertexSet& z) {
  require_forcing(g, z);
  constexpr auto kMax = std::numeric_limits<unsigned long long>::max();
  unsigned long long total = 1;
  for (const auto& st : step_choices(g, z)) {
    for (const auto& f : st.forcers) {
      const auto c = static_cast<unsigned long long>(f.size());
      total = total > kMax / c ? kMax : total * c;
    }
  }
  return total;
}

std::vector<ForcingChain> extract_maximal_chains(const ChronologicalList& list) {
  const int n = list.initial.universe_size();
  std::vector<int> next(static_cast<std::size_t>(n), -1);
  for (const Force& f : list.forces) next[static_cast<std::size_t>(f.source)] = f.target;
  std::vector<ForcingChain> chains;
  list.initial.for_each([&](int start) {
    ForcingChain c;
    for (int v = start; v >= 0; v = next[static_cast<std::size_t>(v)]) c.vertices.push_back(v);
    chains.push_back(std::move(c));
  });
  return chains;
}

VertexSet reversal(const ChronologicalList& list) {
  VertexSet out(list.initial.universe_size());
  for (const auto& c : extract_maximal_chains(list)) out.insert(c.vertices.back());
  return out;
}

LlfcResult llfc(const Graph& g, const VertexSet& z) {
  require_forcing(g, z);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> shortest(n, 0);
  std::vector<int> longest(n, 0);
  LlfcResult r;
  for (const auto& st : step_choices(g, z)) {
    for (std::size_t k = 0; k < st.targets.size(); ++k) {
      int lo = std::numeric_limits<int>::max();
      int hi = 0;
      for (int u : st.forcers[k]) {
        lo = std::min(lo, shortest[static_cast<std::size_t>(u)]);
        hi = std::max(hi, longest[static_cast<std::size_t>(u)]);
      }
      const auto w = static_cast<std::size_t>(st.targets[k]);
      shortest[w] = lo + 1;
      longest[w] = hi + 1;
      r.min_longest = std::max(r.min_longest, shortest[w]);
      r.max_longest = std::max(r.max_longest, longest[w]);
    }
  }
  r.lists = count_chronological_lists(g, z);
  return r;
}

}  // namespace zf
