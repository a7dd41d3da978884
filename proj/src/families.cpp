#include "zforce/families.hpp"

#include <array>
#include <stdexcept>
#include <utility>

#include "zforce/errors.hpp"

namespace zf {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 14> kNames{{
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::grid, "grid"},
    {Family::triangular_grid, "triangular_grid"},
    {Family::king_grid, "king_grid"},
    {Family::cycle_x_path, "cycle_x_path"},
    {Family::complete_x_path, "complete_x_path"},
    {Family::complete_x_complete, "complete_x_complete"},
    {Family::cycle_x_complete, "cycle_x_complete"},
    {Family::cycle_x_cycle, "cycle_x_cycle"},
    {Family::bouquet, "bouquet"},
    {Family::edge_list, "edge_list"},
}};

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

Graph cycle_graph(int n) {
  auto es = path_graph(n).edges();
  es.emplace_back(0, n - 1);
  return Graph(n, es);
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(n, es);
}

Graph complete_bipartite_graph(int p, int q) {
  std::vector<Edge> es;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) es.emplace_back(i, p + j);
  return Graph(p + q, es);
}

std::string coord(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Grid plus diagonals; `down_right` adds (i,j)-(i+1,j+1), `down_left` adds
// (i+1,j)-(i,j+1).
Graph diagonal_grid(int s, int t, bool down_right, bool down_left) {
  Graph base = cartesian_product(path_graph(s), path_graph(t));
  auto es = base.edges();
  auto id = [t](int i, int j) { return i * t + j; };
  for (int i = 0; i + 1 < s; ++i) {
    for (int j = 0; j + 1 < t; ++j) {
      if (down_right) es.emplace_back(id(i, j), id(i + 1, j + 1));
      if (down_left) es.emplace_back(id(i + 1, j), id(i, j + 1));
    }
  }
  return Graph(s * t, es, base.labels());
}

Graph bouquet_graph(const std::vector<int>& ks) {
  int n = 1;
  for (int k : ks) n += k;
  std::vector<Edge> es;
  std::vector<std::string> labels{"v"};
  int next = 1;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const int first = next;
    for (int k = 1; k <= ks[i]; ++k) {
      labels.push_back("w_{" + std::to_string(i + 1) + "," + std::to_string(k) + "}");
      if (k > 1) es.emplace_back(next - 1, next);
      ++next;
    }
    es.emplace_back(0, first);
    es.emplace_back(0, next - 1);
  }
  return Graph(n, es, std::move(labels));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

void require_count(const FamilySpec& spec, std::size_t count) {
  require(spec.params.size() == count, family_name(spec.family) + " takes " +
                                           std::to_string(count) + " parameter(s), got " +
                                           std::to_string(spec.params.size()));
}

}  // namespace

std::string family_name(Family f) {
  for (auto [fam, name] : kNames)
    if (fam == f) return std::string(name);
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (auto [fam, n] : kNames)
    if (n == name) return fam;
  return std::nullopt;
}

std::vector<Family> all_families() {
  std::vector<Family> out;
  for (auto [fam, name] : kNames) out.push_back(fam);
  return out;
}

std::string describe(const FamilySpec& spec) {
  std::string s = family_name(spec.family) + "(";
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(spec.params[i]);
  }
  return s + ")";
}

void validate(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::path:
      require_count(spec, 1);
      require(p[0] >= 2, "path needs n >= 2");
      break;
    case Family::cycle:
      require_count(spec, 1);
      require(p[0] >= 3, "cycle needs n >= 3");
      break;
    case Family::complete:
      require_count(spec, 1);
      require(p[0] >= 2, "complete graph needs n >= 2");
      break;
    case Family::complete_bipartite:
      require_count(spec, 2);
      require(p[0] >= 1 && p[1] >= 1, "complete bipartite graph needs p, q >= 1");
      break;
    case Family::grid:
    case Family::triangular_grid:
    case Family::king_grid:
    case Family::complete_x_path:
    case Family::complete_x_complete:
      require_count(spec, 2);
      require(p[0] >= 2 && p[1] >= 2, family_name(spec.family) + " needs s, t >= 2");
      break;
    case Family::cycle_x_path:
    case Family::cycle_x_complete:
      require_count(spec, 2);
      require(p[0] >= 3 && p[1] >= 2, family_name(spec.family) + " needs s >= 3, t >= 2");
      break;
    case Family::cycle_x_cycle:
      require_count(spec, 2);
      require(p[0] >= 3 && p[1] >= 3, "cycle_x_cycle needs s, t >= 3");
      break;
    case Family::bouquet:
      require(!p.empty(), "bouquet needs at least one circle");
      for (std::size_t i = 0; i < p.size(); ++i) {
        require(p[i] >= 2, "bouquet needs every k_i >= 2");
        require(i == 0 || p[i - 1] <= p[i], "bouquet needs k_1 <= k_2 <= ... <= k_n");
      }
      break;
    case Family::edge_list:
      throw ParameterError("edge_list graphs are read from a file, not generated");
  }
  long long n = 1;
  if (spec.family == Family::bouquet) {
    for (int k : p) n += k;
  } else if (p.size() == 2 && spec.family != Family::complete_bipartite) {
    n = static_cast<long long>(p[0]) * p[1];
  } else {
    n = 0;
    for (int x : p) n += x;
  }
  require(n <= static_cast<long long>(kMaxVertices),
          describe(spec) + " has " + std::to_string(n) + " vertices; the limit is " +
              std::to_string(kMaxVertices));
}

Graph build_family(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::path:
      return path_graph(p[0]);
    case Family::cycle:
      return cycle_graph(p[0]);
    case Family::complete:
      return complete_graph(p[0]);
    case Family::complete_bipartite:
      return complete_bipartite_graph(p[0], p[1]);
    case Family::grid:
      return cartesian_product(path_graph(p[0]), path_graph(p[1]));
    case Family::triangular_grid:
      return diagonal_grid(p[0], p[1], true, false);
    case Family::king_grid:
      return diagonal_grid(p[0], p[1], true, true);
    case Family::cycle_x_path:
      return cartesian_product(cycle_graph(p[0]), path_graph(p[1]));
    case Family::complete_x_path:
      return cartesian_product(complete_graph(p[0]), path_graph(p[1]));
    case Family::complete_x_complete:
      return cartesian_product(complete_graph(p[0]), complete_graph(p[1]));
    case Family::cycle_x_complete:
      return cartesian_product(cycle_graph(p[0]), complete_graph(p[1]));
    case Family::cycle_x_cycle:
      return cartesian_product(cycle_graph(p[0]), cycle_graph(p[1]));
    case Family::bouquet:
      return bouquet_graph(p);
    case Family::edge_list:
      break;
  }
  throw ParameterError("no generator for " + family_name(spec.family));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int s = g.vertex_count();
  const int t = h.vertex_count();
  if (s == 0 || t == 0) throw std::invalid_argument("cartesian product of an empty graph");
  if (static_cast<std::size_t>(s) * static_cast<std::size_t>(t) > kMaxVertices) {
    throw ParameterError("product has " + std::to_string(s * t) + " vertices; the limit is " +
                         std::to_string(kMaxVertices));
  }
  std::vector<Edge> es;
  for (int u = 0; u < s; ++u)
    for (auto [a, b] : h.edges()) es.emplace_back(u * t + a, u * t + b);
  for (int v = 0; v < t; ++v)
    for (auto [a, b] : g.edges()) es.emplace_back(a * t + v, b * t + v);
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(s * t));
  for (int u = 0; u < s; ++u)
    for (int v = 0; v < t; ++v) labels.push_back(coord(u + 1, v + 1));
  return Graph(s * t, es, std::move(labels));
}

Graph star_with_tail(int m, int n) {
  require(m >= 1 && n >= 1, "star with tail needs m, n >= 1");
  std::vector<Edge> es;
  for (int i = 1; i <= m; ++i) es.emplace_back(0, i);
  es.emplace_back(0, m + 1);
  for (int i = m + 1; i < m + n; ++i) es.emplace_back(i, i + 1);
  return Graph(m + n + 1, es);
}

}  // namespace zf
