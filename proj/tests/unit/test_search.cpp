#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "zforce/errors.hpp"
#include "zforce/families.hpp"
#include "zforce/forcing.hpp"
#include "zforce/search.hpp"

using namespace zf;

namespace {

Graph fam(Family f, std::vector<int> p) { return build_family({f, std::move(p)}); }

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) es.emplace_back(u, v);
  return Graph(n, es);
}

void check_against_oracle(const Graph& g) {
  const auto ref = oracle::exact(g);
  const auto r = solve(g);
  CHECK(r.z == ref.z);
  CHECK(r.i == ref.i);
  CHECK(r.num_minimum_zfs == static_cast<unsigned long long>(ref.count));
  CHECK(oracle::mask_of(r.zfs_witness) == ref.minimum_sets.front());
  const auto all = all_minimum_zfs(g);
  REQUIRE(all.size() == ref.minimum_sets.size());
  for (std::size_t k = 0; k < all.size(); ++k) CHECK(oracle::mask_of(all[k]) == ref.minimum_sets[k]);
  // ii_witness: the least minimum set attaining I.
  const oracle::Adj a(g);
  std::uint32_t least = 0;
  for (auto b : ref.minimum_sets) {
    if (oracle::iterations(a, b) == ref.i) {
      least = b;
      break;
    }
  }
  CHECK(oracle::mask_of(r.ii_witness) == least);
  const auto first = zero_forcing_number(g);
  CHECK(first.z == ref.z);
  CHECK(first.witness == r.zfs_witness);
}

}  // namespace

TEST_CASE("closed forms on small families") {
  for (int n = 3; n <= 10; ++n) CHECK(zero_forcing_number(fam(Family::cycle, {n})).z == 2);
  CHECK(solve(fam(Family::complete_bipartite, {3, 4})).z == 5);
  CHECK(solve(fam(Family::bouquet, {2, 3, 4})).z == 4);
  CHECK(solve(fam(Family::bouquet, {2, 3, 4})).i == 3);
  const Graph single(1, {});
  CHECK(solve(single).z == 1);
  CHECK(solve(single).i == 0);
  CHECK(solve(single).zfs_witness == VertexSet(1, {0}));
}

TEST_CASE("minimum sets of paths and complete graphs") {
  const auto p = all_minimum_zfs(fam(Family::path, {6}));
  REQUIRE(p.size() == 2);
  CHECK(p[0] == VertexSet(6, {0}));
  CHECK(p[1] == VertexSet(6, {5}));
  const auto k = all_minimum_zfs(fam(Family::complete, {5}));
  CHECK(k.size() == 5);
  for (const auto& s : k) CHECK(s.size() == 4);
}

TEST_CASE("iteration index of small named graphs") {
  const auto c3k2 = iteration_index(fam(Family::cycle_x_complete, {3, 2}));
  CHECK(c3k2.i == 1);
  CHECK(run_forcing(fam(Family::cycle_x_complete, {3, 2}), c3k2.witness).iterations() == 1);
  for (int q = 2; q <= 6; ++q) CHECK(iteration_index(fam(Family::complete_bipartite, {1, q})).i == 2);
  CHECK(iteration_index(fam(Family::complete_x_complete, {3, 3})).i == 2);
}

TEST_CASE("solver agrees with exhaustive search on named graphs") {
  for (const auto& spec : std::vector<FamilySpec>{{Family::cycle_x_complete, {3, 2}},
                                                  {Family::bouquet, {2, 2, 3}},
                                                  {Family::grid, {3, 4}},
                                                  {Family::king_grid, {3, 3}},
                                                  {Family::triangular_grid, {3, 4}},
                                                  {Family::complete_bipartite, {3, 3}},
                                                  {Family::cycle_x_path, {4, 3}}}) {
    CAPTURE(describe(spec));
    check_against_oracle(build_family(spec));
  }
}

TEST_CASE("solver agrees with exhaustive search on random graphs") {
  std::mt19937_64 rng(20240611);
  for (int k = 0; k < 120; ++k) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const double p = 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
    const Graph g = random_graph(rng, n, p);
    CAPTURE(k);
    check_against_oracle(g);
  }
}

TEST_CASE("components are solved separately and combined") {
  const Graph g(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 3}});
  const auto r = solve(g);
  CHECK(r.components == 3);
  CHECK(r.z == 1 + 2 + 1);
  CHECK(r.i == 2);
  check_against_oracle(g);

  SearchOptions whole;
  whole.split_components = false;
  const auto direct = solve(g, whole);
  CHECK(direct.components == 1);
  CHECK(direct.z == r.z);
  CHECK(direct.i == r.i);
  CHECK(direct.zfs_witness == r.zfs_witness);
  CHECK(direct.ii_witness == r.ii_witness);
  CHECK(direct.num_minimum_zfs == r.num_minimum_zfs);
  CHECK(all_minimum_zfs(g, whole) == all_minimum_zfs(g));
}

TEST_CASE("component decomposition matches direct search on random forests of pieces") {
  std::mt19937_64 rng(77);
  SearchOptions whole;
  whole.split_components = false;
  for (int k = 0; k < 40; ++k) {
    const Graph g = random_graph(rng, 9, 0.18);
    const auto a = solve(g);
    const auto b = solve(g, whole);
    CHECK(a.z == b.z);
    CHECK(a.i == b.i);
    CHECK(a.zfs_witness == b.zfs_witness);
    CHECK(a.ii_witness == b.ii_witness);
    CHECK(a.num_minimum_zfs == b.num_minimum_zfs);
  }
}

TEST_CASE("worker count does not change results") {
  for (const auto& spec : std::vector<FamilySpec>{{Family::cycle_x_cycle, {4, 4}},
                                                  {Family::king_grid, {4, 4}},
                                                  {Family::bouquet, {2, 3, 4}},
                                                  {Family::grid, {5, 5}}}) {
    const Graph g = build_family(spec);
    SearchOptions serial;
    SearchOptions parallel;
    parallel.workers = 4;
    const auto a = solve(g, serial);
    const auto b = solve(g, parallel);
    CAPTURE(describe(spec));
    CHECK(a.z == b.z);
    CHECK(a.i == b.i);
    CHECK(a.zfs_witness == b.zfs_witness);
    CHECK(a.ii_witness == b.ii_witness);
    CHECK(a.num_minimum_zfs == b.num_minimum_zfs);
    CHECK(a.closures == b.closures);
    const auto fa = zero_forcing_number(g, serial);
    const auto fb = zero_forcing_number(g, parallel);
    CHECK(fa.witness == fb.witness);
    CHECK(fa.closures == fb.closures);
  }
}

TEST_CASE("graphs beyond 64 vertices") {
  const Graph p = fam(Family::path, {100});
  const auto r = solve(p);
  CHECK(r.z == 1);
  CHECK(r.i == 99);
  CHECK(r.num_minimum_zfs == 2);
  CHECK(r.zfs_witness == VertexSet(100, {0}));
  const Graph c = fam(Family::cycle, {80});
  const auto rc = solve(c);
  CHECK(rc.z == 2);
  CHECK(rc.i == 39);
  CHECK(rc.num_minimum_zfs == 80);
  CHECK(forcing_iterations(c, VertexSet(80, {0, 1})) == 39);
  CHECK(forcing_iterations(c, VertexSet(80, {0})) == -1);
}

TEST_CASE("budget guard refuses before overrunning") {
  SearchOptions tight;
  tight.budget = 100;
  const Graph g = fam(Family::grid, {4, 4});
  try {
    solve(g, tight);
    FAIL("expected a budget refusal");
  } catch (const BudgetExceeded& e) {
    CHECK(e.lower_bound() >= 2);
    CHECK(e.lower_bound() <= 4);
  }
  CHECK_THROWS_AS(zero_forcing_number(g, tight), BudgetExceeded);
  SearchOptions roomy;
  roomy.budget = 1'000'000;
  CHECK(solve(g, roomy).closures <= roomy.budget);
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(25, 8) == 1'081'575);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(256, 128) == std::numeric_limits<unsigned long long>::max());
}
