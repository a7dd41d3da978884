#include "zforce/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace zf {

Graph::Graph(int n, const std::vector<Edge>& edges, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 0 || static_cast<std::size_t>(n) > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxVertices) + "]");
  }
  if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
  }
  int twice = 0;
  for (const auto& a : adj_) twice += a.size();
  m_ = twice / 2;
}

VertexSet Graph::closed_neighborhood(int v) const {
  VertexSet s = neighbors(v);
  s.insert(v);
  return s;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return adj_[static_cast<std::size_t>(u)].contains(v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    neighbors(u).for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

std::string Graph::label(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v));
  return labels_.empty() ? std::to_string(v) : labels_[static_cast<std::size_t>(v)];
}

std::optional<int> Graph::find_label(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::vector<int> Graph::isolated_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (neighbors(v).empty()) out.push_back(v);
  return out;
}

std::vector<std::string> Graph::validate() const {
  std::vector<std::string> warnings;
  for (int v : isolated_vertices()) {
    warnings.push_back("vertex " + label(v) + " is isolated");
  }
  return warnings;
}

Graph Graph::without_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v));
  return induced(VertexSet::full(n_) - VertexSet(n_, {v}));
}

Graph Graph::without_edge(int u, int v) const {
  if (!has_edge(u, v)) {
    throw std::invalid_argument("(" + std::to_string(u) + "," + std::to_string(v) +
                                ") is not an edge");
  }
  auto es = edges();
  std::erase(es, Edge{std::min(u, v), std::max(u, v)});
  return Graph(n_, es, labels_);
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  std::vector<std::string> labels;
  int k = 0;
  keep.for_each([&](int v) {
    index[static_cast<std::size_t>(v)] = k++;
    if (!labels_.empty()) labels.push_back(labels_[static_cast<std::size_t>(v)]);
  });
  std::vector<Edge> es;
  for (auto [u, w] : edges()) {
    int a = index[static_cast<std::size_t>(u)];
    int b = index[static_cast<std::size_t>(w)];
    if (a >= 0 && b >= 0) es.emplace_back(a, b);
  }
  return Graph(k, es, std::move(labels));
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  VertexSet seen(n_);
  for (int s = 0; s < n_; ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp(n_, {s});
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next(n_);
      frontier.for_each([&](int u) { next |= neighbors(u); });
      frontier = next - comp;
      comp |= next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats st;
  const int n = g.vertex_count();
  st.sequence.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) st.sequence[static_cast<std::size_t>(v)] = g.degree(v);
  if (n > 0) {
    auto [lo, hi] = std::minmax_element(st.sequence.begin(), st.sequence.end());
    st.min_degree = *lo;
    st.max_degree = *hi;
  }
  return st;
}

}  // namespace zf
