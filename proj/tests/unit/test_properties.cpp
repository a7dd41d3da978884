#include <doctest.h>

#include <algorithm>
#include <random>

#include "support/oracles.hpp"
#include "zforce/bounds.hpp"
#include "zforce/chronology.hpp"
#include "zforce/families.hpp"
#include "zforce/forcing.hpp"
#include "zforce/kernel.hpp"
#include "zforce/path_cover.hpp"
#include "zforce/search.hpp"

using namespace zf;

namespace {

constexpr std::uint64_t kSeed = 0x5eed2024;
constexpr int kCases = 1200;

Graph random_graph(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> density(0.1, 0.8);
  std::bernoulli_distribution edge(density(rng));
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) es.emplace_back(u, v);
  return Graph(n, es);
}

// Named members interleaved with random graphs, all on at most 12 vertices.
Graph fixture(std::mt19937_64& rng, int k) {
  static const std::vector<FamilySpec> named{
      {Family::cycle_x_complete, {3, 2}}, {Family::grid, {3, 4}},         {Family::king_grid, {3, 3}},
      {Family::triangular_grid, {3, 4}},  {Family::bouquet, {2, 3, 3}},   {Family::complete, {6}},
      {Family::complete_bipartite, {3, 4}}, {Family::cycle_x_path, {4, 3}}, {Family::path, {9}},
      {Family::cycle, {10}}};
  if (k % 3 == 0) return build_family(named[(k / 3) % named.size()]);
  return random_graph(rng, 3 + static_cast<int>(rng() % 10));
}

VertexSet random_subset(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution pick(p);
  VertexSet s(n);
  for (int v = 0; v < n; ++v)
    if (pick(rng)) s.insert(v);
  return s;
}

// Apply single forces in random order until none applies.
VertexSet random_sequential_closure(const Graph& g, VertexSet black, std::mt19937_64& rng) {
  const oracle::Adj a(g);
  while (true) {
    std::vector<int> targets;
    for (int u : black.members()) {
      int white = -1;
      int count = 0;
      for (int w = 0; w < a.n; ++w)
        if (a.m[u][w] && !black.contains(w)) white = w, ++count;
      if (count == 1) targets.push_back(white);
    }
    if (targets.empty()) return black;
    black.insert(targets[rng() % targets.size()]);
  }
}

// A minimum zero forcing set or a random superset of one, so most cases force.
VertexSet forcing_candidate(const Graph& g, std::mt19937_64& rng) {
  const auto sets = all_minimum_zfs(g);
  VertexSet z = sets[rng() % sets.size()];
  if (rng() % 2) z = z | random_subset(rng, g.vertex_count(), 0.2);
  return z;
}

}  // namespace

TEST_CASE("closure is confluent and monotone") {
  std::mt19937_64 rng(kSeed);
  for (int k = 0; k < kCases; ++k) {
    const Graph g = fixture(rng, k);
    const int n = g.vertex_count();
    const VertexSet z = random_subset(rng, n, 0.35);
    const VertexSet c = closure(g, z);
    CAPTURE(k);
    CHECK(random_sequential_closure(g, z, rng) == c);
    CHECK(oracle::mask_of(c) == oracle::layers(oracle::Adj(g), oracle::mask_of(z)).back());
    const VertexSet bigger = z | random_subset(rng, n, 0.3);
    CHECK(c.is_subset_of(closure(g, bigger)));
  }
}

TEST_CASE("supersets of forcing sets force no slower") {
  std::mt19937_64 rng(kSeed + 1);
  for (int k = 0; k < kCases; ++k) {
    const Graph g = fixture(rng, k);
    const VertexSet z = forcing_candidate(g, rng);
    const VertexSet bigger = z | random_subset(rng, g.vertex_count(), 0.25);
    const int iz = forcing_iterations(g, z);
    CAPTURE(k);
    REQUIRE(iz >= 0);
    const int ib = forcing_iterations(g, bigger);
    CHECK(ib >= 0);
    CHECK(ib <= iz);
  }
}

TEST_CASE("each step derives at most |Z| vertices") {
  std::mt19937_64 rng(kSeed + 2);
  for (int k = 0; k < kCases; ++k) {
    const Graph g = fixture(rng, k);
    const VertexSet z = (k % 2) ? forcing_candidate(g, rng) : random_subset(rng, g.vertex_count(), 0.4);
    const auto t = run_forcing(g, z);
    CAPTURE(k);
    for (const auto& d : t.derived) {
      CHECK(d.size() >= 1);
      CHECK(d.size() <= z.size());
    }
    CHECK(t.success == (closure(g, z) == VertexSet::full(g.vertex_count())));
  }
}

TEST_CASE("reversals are forcing sets of the same size") {
  std::mt19937_64 rng(kSeed + 3);
  for (int k = 0; k < kCases; ++k) {
    const Graph g = fixture(rng, k);
    const VertexSet z = forcing_candidate(g, rng);
    const auto lists = enumerate_chronological_lists(g, z, 8);
    CAPTURE(k);
    REQUIRE_FALSE(lists.lists.empty());
    for (const auto& l : lists.lists) {
      CHECK(is_valid_list(g, l));
      const VertexSet r = reversal(l);
      CHECK(r.size() == z.size());
      CHECK(is_zero_forcing_set(g, r));
    }
  }
}

TEST_CASE("longest forcing chain never exceeds the iteration count") {
  std::mt19937_64 rng(kSeed + 4);
  for (int k = 0; k < kCases; ++k) {
    const Graph g = fixture(rng, k);
    const VertexSet z = forcing_candidate(g, rng);
    const auto c = llfc(g, z);
    const int iz = forcing_iterations(g, z);
    CAPTURE(k);
    CHECK(c.lists >= 1);
    CHECK(c.min_longest <= c.max_longest);
    CHECK(c.max_longest <= iz);
    CHECK((c.min_longest == 0) == (iz == 0));
  }
}

TEST_CASE("generic kernel substitution matches the forcing process") {
  std::mt19937_64 rng(kSeed + 5);
  for (int k = 0; k < kCases; ++k) {
    const Graph g = fixture(rng, k);
    const VertexSet z = (k % 2) ? forcing_candidate(g, rng) : random_subset(rng, g.vertex_count(), 0.4);
    const auto t = run_forcing(g, z);
    const auto kr = generic_kernel_rounds(g, z);
    CAPTURE(k);
    CHECK(kr.solved == t.success);
    if (t.success) CHECK(kr.rounds == t.iterations());
  }
}

TEST_CASE("structural bounds hold on every solved fixture") {
  std::mt19937_64 rng(kSeed + 6);
  for (int k = 0; k < kCases; ++k) {
    const Graph g = fixture(rng, k);
    const auto r = solve(g);
    const int p = path_cover_number(g);
    CAPTURE(k);
    const auto b = evaluate_bounds(g, r.z, r.i, p);
    CHECK(b.satisfied());
    CHECK(b.min_degree <= r.z);
    CHECK(p <= r.z);
    CHECK(forcing_iterations(g, r.ii_witness) == r.i);
    CHECK(r.zfs_witness.size() == r.z);
  }
}

TEST_CASE("vertex and edge deletion move Z by at most one") {
  std::mt19937_64 rng(kSeed + 7);
  for (int k = 0; k < 200; ++k) {
    const Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 8));
    const auto rep = perturbation_check(g);
    CAPTURE(k);
    CHECK(rep.all_ok());
    CHECK(rep.rows.size() == static_cast<std::size_t>(g.vertex_count() + g.edge_count()));
  }
}

TEST_CASE("Cartesian product inequality") {
  std::mt19937_64 rng(kSeed + 8);
  for (int k = 0; k < 120; ++k) {
    const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 3));
    const Graph h = random_graph(rng, 2 + static_cast<int>(rng() % 3));
    const auto b = check_product_bound(g, h);
    CAPTURE(k);
    CHECK(b.ok);
    CHECK(b.z_product == oracle::exact(cartesian_product(g, h)).z);
  }
}
