#include "zforce/trees.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "zforce/search.hpp"

namespace zf {
namespace {

std::vector<int> tree_centers(const Graph& t) {
  const int n = t.vertex_count();
  if (n <= 2) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    return all;
  }
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = t.degree(v);
    if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int leaf : layer) {
      t.neighbors(leaf).for_each([&](int w) {
        if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
      });
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string encode(const Graph& t, int v, int parent) {
  std::vector<std::string> kids;
  t.neighbors(v).for_each([&](int w) {
    if (w != parent) kids.push_back(encode(t, w, v));
  });
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
  if (tree.vertex_count() == 0) return "";
  if (tree.edge_count() != tree.vertex_count() - 1 || tree.components().size() != 1) {
    throw std::invalid_argument("graph is not a tree");
  }
  std::string best;
  for (int c : tree_centers(tree)) {
    std::string s = encode(tree, c, -1);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

std::vector<Graph> free_trees(int n) {
  if (n < 1) return {};
  std::vector<Graph> level{Graph(1, {})};
  for (int k = 1; k < n; ++k) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& t : level) {
      for (int v = 0; v < k; ++v) {
        auto es = t.edges();
        es.emplace_back(v, k);
        Graph grown(k + 1, es);
        if (seen.insert(tree_canonical_form(grown)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Graph> find_chain_gap_trees(int n, const ChainGapCriteria& criteria) {
  std::vector<Graph> out;
  for (const Graph& t : free_trees(n)) {
    const auto r = solve(t);
    if (r.z != criteria.z || r.num_minimum_zfs != criteria.num_minimum_zfs || r.i != criteria.i) {
      continue;
    }
    bool ok = true;
    for (const auto& z : all_minimum_zfs(t)) {
      const auto l = llfc(t, z);
      if (l.min_longest != criteria.llfc || l.max_longest != criteria.llfc) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(t);
  }
  return out;
}

std::optional<std::vector<int>> find_relabeling(const std::vector<VertexSet>& from,
                                                const std::vector<VertexSet>& to) {
  if (from.size() != to.size()) return std::nullopt;
  if (from.empty()) return std::vector<int>{};
  const int n = from.front().universe_size();
  for (const auto& s : to)
    if (s.universe_size() != n) return std::nullopt;

  // Membership counts must agree under any valid relabeling.
  auto counts = [n](const std::vector<VertexSet>& fam) {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    for (const auto& s : fam) s.for_each([&](int v) { ++c[static_cast<std::size_t>(v)]; });
    return c;
  };
  const auto cf = counts(from);
  const auto ct = counts(to);
  std::vector<VertexSet> target = to;
  std::sort(target.begin(), target.end());

  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> assign = [&](int v) -> bool {
    if (v == n) {
      std::vector<VertexSet> mapped;
      mapped.reserve(from.size());
      for (const auto& s : from) {
        VertexSet m(n);
        s.for_each([&](int x) { m.insert(perm[static_cast<std::size_t>(x)]); });
        mapped.push_back(m);
      }
      std::sort(mapped.begin(), mapped.end());
      return mapped == target;
    }
    for (int w = 0; w < n; ++w) {
      const auto sw = static_cast<std::size_t>(w);
      if (used[sw] || ct[sw] != cf[static_cast<std::size_t>(v)]) continue;
      used[sw] = 1;
      perm[static_cast<std::size_t>(v)] = w;
      if (assign(v + 1)) return true;
      used[sw] = 0;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return perm;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) {
    es.emplace_back(perm.at(static_cast<std::size_t>(u)), perm.at(static_cast<std::size_t>(v)));
  }
  return Graph(g.vertex_count(), es);
}

}  // namespace zf
