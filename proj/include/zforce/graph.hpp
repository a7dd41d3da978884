#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zforce/vertex_set.hpp"

namespace zf {

using Edge = std::pair<int, int>;

/// Immutable finite simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one VertexSet per vertex. An optional label per
/// vertex carries the human-readable coordinate used by the family
/// generators ("(2,3)", "w_{1,2}", ...); labels never affect equality.
class Graph {
 public:
  Graph() = default;

  /// Duplicate edges collapse. Self-loops and out-of-range endpoints throw
  /// std::invalid_argument. `labels` must be empty or have exactly n entries.
  Graph(int n, const std::vector<Edge>& edges, std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  const VertexSet& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  VertexSet closed_neighborhood(int v) const;
  int degree(int v) const { return neighbors(v).size(); }
  bool has_edge(int u, int v) const;

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  /// The stored label, or the decimal id when the graph is unlabeled.
  std::string label(int v) const;
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find_label(std::string_view label) const;

  std::vector<int> isolated_vertices() const;
  /// Non-fatal findings (isolated vertices). Empty when the graph meets the
  /// usual "no isolated vertices" assumption.
  std::vector<std::string> validate() const;

  /// G - {v}; vertices above v shift down by one.
  Graph without_vertex(int v) const;
  /// G - e; throws std::invalid_argument if e is not an edge.
  Graph without_edge(int u, int v) const;
  /// Subgraph induced by `keep`, vertices renumbered in ascending order.
  Graph induced(const VertexSet& keep) const;

  /// Connected components, ordered by smallest member.
  std::vector<VertexSet> components() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  std::vector<int> sequence;  // indexed by vertex id
};

DegreeStats degree_stats(const Graph& g);

}  // namespace zf
