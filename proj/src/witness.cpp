#include "zforce/witness.hpp"

#include <stdexcept>

#include "zforce/forcing.hpp"

namespace zf {
namespace {

int ceil_half(int x) { return (x + 1) / 2; }

// Builder for sets on an s x t product, addressed by 1-based (i, j).
class Coords {
 public:
  Coords(int s, int t) : t_(t), set_(s * t) {}
  void add(int i, int j) { set_.insert((i - 1) * t_ + (j - 1)); }
  void remove(int i, int j) { set_.erase((i - 1) * t_ + (j - 1)); }
  void add_row(int i, int cols) {
    for (int j = 1; j <= cols; ++j) add(i, j);
  }
  void add_col(int j, int rows) {
    for (int i = 1; i <= rows; ++i) add(i, j);
  }
  const VertexSet& set() const { return set_; }

 private:
  int t_;
  VertexSet set_;
};

ProofWitness exact(VertexSet s, int iterations, std::string what) {
  return {std::move(s), iterations, std::nullopt, 0, std::move(what)};
}

ProofWitness bounded(VertexSet s, int bound, std::string what) {
  return {std::move(s), std::nullopt, bound, 0, std::move(what)};
}

ProofWitness forcing_only(VertexSet s, std::string what) {
  return {std::move(s), std::nullopt, std::nullopt, 0, std::move(what)};
}

std::optional<ProofWitness> construct(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::path:
      return exact(VertexSet(p[0], {0}), p[0] - 1, "an end-vertex");
    case Family::cycle:
      return exact(VertexSet(p[0], {0, 1}), ceil_half(p[0] - 2), "two adjacent vertices");
    case Family::complete: {
      VertexSet s = VertexSet::full(p[0]);
      s.erase(p[0] - 1);
      return exact(s, 1, "all but one vertex");
    }
    case Family::complete_bipartite: {
      const int a = p[0];
      const int b = p[1];
      VertexSet s = VertexSet::full(a + b);
      if (a >= 2 && b >= 2) {
        s.erase(0);
        s.erase(a);
        return exact(s, 1, "all but one vertex of each part");
      }
      if (a == 1 && b == 1) return exact(VertexSet(2, {0}), 1, "one vertex of K_2");
      // K_{1,q}: drop the center and one leaf.
      const int center = a == 1 ? 0 : a;
      const int leaf = a == 1 ? 1 : 0;
      s.erase(center);
      s.erase(leaf);
      return exact(s, 2, "all leaves but one");
    }
    case Family::grid:
    case Family::complete_x_path: {
      const int s = p[0];
      const int t = p[1];
      Coords c(s, t);
      if (spec.family == Family::grid && s > t) {
        c.add_row(1, t);
        return exact(c.set(), s - 1, "first row");
      }
      c.add_col(1, s);
      return exact(c.set(), t - 1, "first column");
    }
    case Family::cycle_x_path: {
      const int s = p[0];
      const int t = p[1];
      Coords c(s, t);
      if (s >= 2 * t) {
        c.add_row(1, t);
        c.add_row(s, t);
        return exact(c.set(), ceil_half(s - 2), "rows 1 and s");
      }
      c.add_col(1, s);
      return exact(c.set(), t - 1, "first column");
    }
    case Family::cycle_x_complete: {
      const int s = p[0];
      const int t = p[1];
      Coords c(s, t);
      if (s >= 4) {
        c.add_row(1, t);
        c.add_row(s, t);
        return exact(c.set(), ceil_half(s - 2), "rows 1 and s");
      }
      if (t == 2) {
        c.add_col(1, s);
        return exact(c.set(), 1, "first column");
      }
      [[fallthrough]];
    }
    case Family::complete_x_complete: {
      const int s = p[0];
      const int t = p[1];
      Coords c(s, t);
      if (t == 2) {
        c.add_col(1, s);
        return exact(c.set(), 1, "first column");
      }
      if (s == 2) {
        c.add_row(1, t);
        return exact(c.set(), 1, "first row");
      }
      for (int j = 1; j <= t - 1; ++j)
        for (int i = 2; i <= s; ++i) c.add(i, j);
      c.add(1, 1);
      return exact(c.set(), 2, "rows 2..s of columns 1..t-1, plus (1,1)");
    }
    case Family::cycle_x_cycle: {
      const int s = p[0];
      const int t = p[1];
      Coords c(s, t);
      if (s == t && s % 2 == 1) {
        c.add_row(1, t);
        c.add_row(2, t);
        c.remove(1, (s + 1) / 2);
        return forcing_only(c.set(), "rows 1 and 2 minus (1,(s+1)/2)");
      }
      if (s <= t) {
        c.add_col(1, s);
        c.add_col(2, s);
        return forcing_only(c.set(), "columns 1 and 2");
      }
      c.add_row(1, t);
      c.add_row(2, t);
      return forcing_only(c.set(), "rows 1 and 2");
    }
    case Family::triangular_grid: {
      const int s = p[0];
      const int t = p[1];
      Coords c(s, t);
      if (s > t) {
        c.add_row(1, t);
        return bounded(c.set(), 2 * s + t - 4, "first row");
      }
      c.add_col(1, s);
      return bounded(c.set(), 2 * t + s - 4, "first column");
    }
    case Family::king_grid: {
      const int s = p[0];
      const int t = p[1];
      Coords c(s, t);
      if (s == 3) {
        c.add_row(2, t);
        c.add(1, 1);
        c.add(3, 1);
        return bounded(c.set(), t - 1, "middle row plus (1,1) and (3,1)");
      }
      if (t == 3) {
        c.add_col(2, s);
        c.add(1, 1);
        c.add(1, 3);
        return bounded(c.set(), s - 1, "middle column plus (1,1) and (1,3)");
      }
      c.add_row(1, t);
      c.add_col(1, s);
      return bounded(c.set(), s + t - 3, "first row and first column");
    }
    case Family::bouquet: {
      int n = 1;
      for (int k : p) n += k;
      VertexSet s(n, {0});
      int first = 1;
      for (int k : p) {
        s.insert(first);
        first += k;
      }
      const auto m = p.size();
      const int iters = m == 1 ? ceil_half(p[0] - 1) : ceil_half(p[m - 1] + p[m - 2]) - 1;
      return exact(s, iters, "cut-vertex plus w_{i,1} for each circle");
    }
    case Family::edge_list:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ProofWitness> proof_witness(const FamilySpec& spec) {
  if (spec.family == Family::edge_list) return std::nullopt;
  const Graph g = build_family(spec);
  auto w = construct(spec);
  if (!w) return std::nullopt;
  const ForcingTrace trace = run_forcing(g, w->set);
  w->iterations = trace.iterations();
  const std::string name = describe(spec) + " construction \"" + w->construction + "\"";
  if (!trace.success) throw std::logic_error(name + " does not force");
  if (w->claimed_iterations && *w->claimed_iterations != trace.iterations()) {
    throw std::logic_error(name + " takes " + std::to_string(trace.iterations()) +
                           " iterations, expected " + std::to_string(*w->claimed_iterations));
  }
  if (w->iteration_bound && trace.iterations() > *w->iteration_bound) {
    throw std::logic_error(name + " takes " + std::to_string(trace.iterations()) +
                           " iterations, above the bound " + std::to_string(*w->iteration_bound));
  }
  return w;
}

}  // namespace zf
