#include "zforce/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "zforce/families.hpp"

namespace zf {

BoundsReport evaluate_bounds(const Graph& g, int z, int i, std::optional<int> path_cover) {
  BoundsReport b;
  b.vertices = g.vertex_count();
  b.z = z;
  b.i = i;
  b.min_degree = degree_stats(g).min_degree;
  b.path_cover = path_cover;
  b.has_edge = g.edge_count() > 0;
  b.degree_ok = b.min_degree <= z;
  b.path_cover_ok = !path_cover || *path_cover <= z;
  if (b.has_edge && z > 0) {
    const int n = b.vertices;
    b.i_lower = std::max((n + z - 1) / z - 1, 1);
    b.i_upper = n - z;
    b.i_lower_ok = i >= 1 && static_cast<long long>(n) <= static_cast<long long>(i + 1) * z;
    b.i_upper_ok = i <= b.i_upper;
  }
  return b;
}

BoundsReport check_bounds(const Graph& g, int z, int i, std::optional<int> path_cover) {
  auto b = evaluate_bounds(g, z, i, path_cover);
  if (!b.satisfied()) {
    std::string what = "bound violated for Z=" + std::to_string(z) + ", I=" + std::to_string(i) + ":";
    if (!b.i_lower_ok) what += " I below max{|V|/Z-1,1}";
    if (!b.i_upper_ok) what += " I above |V|-Z";
    if (!b.degree_ok) what += " Z below min degree";
    if (!b.path_cover_ok) what += " Z below path cover number";
    throw std::logic_error(what);
  }
  return b;
}

bool PerturbationReport::all_ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.ok; });
}

PerturbationReport perturbation_check(const Graph& g, const SearchOptions& opts) {
  PerturbationReport rep;
  rep.z = zero_forcing_number(g, opts).z;
  auto within = [&](int after) { return rep.z - 1 <= after && after <= rep.z + 1; };
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int after = zero_forcing_number(g.without_vertex(v), opts).z;
    rep.rows.push_back({PerturbationRow::Kind::vertex, v, -1, after, within(after)});
  }
  for (auto [u, v] : g.edges()) {
    const int after = zero_forcing_number(g.without_edge(u, v), opts).z;
    rep.rows.push_back({PerturbationRow::Kind::edge, u, v, after, within(after)});
  }
  return rep;
}

ProductBound product_bound(int z_product, int z_g, int n_g, int z_h, int n_h) {
  ProductBound p;
  p.z_product = z_product;
  p.bound = std::min(static_cast<long long>(z_g) * n_h, static_cast<long long>(z_h) * n_g);
  p.ok = z_product <= p.bound;
  return p;
}

ProductBound check_product_bound(const Graph& g, const Graph& h, const SearchOptions& opts) {
  const int zp = zero_forcing_number(cartesian_product(g, h), opts).z;
  return product_bound(zp, zero_forcing_number(g, opts).z, g.vertex_count(),
                       zero_forcing_number(h, opts).z, h.vertex_count());
}

}  // namespace zf
