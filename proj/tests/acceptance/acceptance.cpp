// Acceptance suite: one PASS/FAIL line per criterion.
//
//   zforce_acceptance            run every criterion
//   zforce_acceptance --only N   run criterion N alone
//
// Exit status is 0 only when every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "support/oracles.hpp"
#include "zforce/bounds.hpp"
#include "zforce/chronology.hpp"
#include "zforce/families.hpp"
#include "zforce/forcing.hpp"
#include "zforce/kernel.hpp"
#include "zforce/path_cover.hpp"
#include "zforce/search.hpp"
#include "zforce/trees.hpp"

using namespace zf;
using json = nlohmann::json;

namespace {

// Every closed-form value is an integer compared for exact equality.
constexpr int kTolerance = 0;

constexpr std::uint64_t kPropertySeed = 0x5eed2024;
constexpr int kPropertyCases = 1000;
constexpr int kPropertyMaxVertices = 12;
constexpr int kDeletionMaxVertices = 10;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  json payload = json::object();

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (notes.size() < 20) notes.push_back("mismatch: " + what);
    }
  }
};

bool equal(long long got, long long want) { return std::llabs(got - want) <= kTolerance; }

int ceil_half(int x) { return (x + 1) / 2; }

Graph fam(Family f, std::vector<int> p) { return build_family({f, std::move(p)}); }

json row(const FamilySpec& spec, const SolveResult& r) {
  return {{"graph", describe(spec)},
          {"z", r.z},
          {"i", r.i},
          {"zfs_witness", r.zfs_witness.members()},
          {"ii_witness", r.ii_witness.members()},
          {"num_min_zfs", r.num_minimum_zfs}};
}

// Solve, record, and compare against exact Z and/or I (negative = unchecked).
void expect(Outcome& o, const SearchOptions& opts, const FamilySpec& spec, int z, int i) {
  const auto r = solve(build_family(spec), opts);
  o.payload["rows"].push_back(row(spec, r));
  const std::string name = describe(spec);
  if (z >= 0) o.require(equal(r.z, z), name + " Z=" + std::to_string(r.z) + " want " + std::to_string(z));
  if (i >= 0) o.require(equal(r.i, i), name + " I=" + std::to_string(r.i) + " want " + std::to_string(i));
}

Outcome closed_forms(const SearchOptions& opts) {
  Outcome o;
  for (int n = 2; n <= 12; ++n) expect(o, opts, {Family::path, {n}}, 1, n - 1);
  for (int n = 3; n <= 12; ++n) expect(o, opts, {Family::cycle, {n}}, 2, ceil_half(n - 2));
  for (int n = 2; n <= 8; ++n) expect(o, opts, {Family::complete, {n}}, n - 1, 1);
  for (int q = 2; q <= 6; ++q) expect(o, opts, {Family::complete_bipartite, {1, q}}, q - 1, 2);
  for (int p = 2; p <= 5; ++p)
    for (int q = 2; q <= 5; ++q) expect(o, opts, {Family::complete_bipartite, {p, q}}, p + q - 2, 1);
  o.notes.push_back(std::to_string(o.payload["rows"].size()) + " graphs");
  return o;
}

Outcome products(const SearchOptions& opts) {
  Outcome o;
  for (int s = 2; s <= 5; ++s)
    for (int t = s; t <= 5; ++t) expect(o, opts, {Family::grid, {s, t}}, s, t - 1);
  for (int s = 2; s <= 4; ++s)
    for (int t = 2; t <= 4; ++t) expect(o, opts, {Family::complete_x_path, {s, t}}, -1, t - 1);
  int wide = 0;
  int narrow = 0;
  for (int s = 3; s <= 6; ++s) {
    for (int t = 2; t <= 3; ++t) {
      const bool is_wide = s >= 2 * t;
      (is_wide ? wide : narrow)++;
      expect(o, opts, {Family::cycle_x_path, {s, t}}, -1, is_wide ? ceil_half(s - 2) : t - 1);
    }
  }
  o.require(wide > 0 && narrow > 0, "both cycle-by-path branches exercised");
  for (int s = 4; s <= 5; ++s)
    for (int t = 2; t <= 3; ++t) expect(o, opts, {Family::cycle_x_complete, {s, t}}, -1, ceil_half(s - 2));
  for (int s = 3; s <= 4; ++s)
    for (int t = 3; t <= 4; ++t) expect(o, opts, {Family::complete_x_complete, {s, t}}, s * t - s - t + 2, 2);
  o.notes.push_back(std::to_string(o.payload["rows"].size()) + " graphs; cycle-by-path branches: " +
                    std::to_string(wide) + " with s >= 2t, " + std::to_string(narrow) + " with s < 2t");
  return o;
}

// 1-based labels, e.g. "{2,4,6}".
std::string one_based(const VertexSet& z) {
  std::string out;
  for (int v : z.members()) out += (out.empty() ? "" : ",") + std::to_string(v + 1);
  return "{" + out + "}";
}

// Labels 1..6 on C3 x K2 are vertex ids 0..5.
VertexSet labelled(std::initializer_list<int> labels) {
  VertexSet s(6);
  for (int k : labels) s.insert(k - 1);
  return s;
}

Outcome c3k2_traces(const SearchOptions& opts) {
  Outcome o;
  const Graph g = fam(Family::cycle_x_complete, {3, 2});
  const auto r = solve(g, opts);
  o.require(r.z == 3, "Z(C3xK2) = 3");
  o.require(r.i == 1, "I(C3xK2) = 1");

  struct Case {
    VertexSet z;
    int iterations;
    std::vector<VertexSet> derived;
  };
  const std::vector<Case> cases{{labelled({2, 4, 6}), 1, {labelled({1, 3, 5})}},
                                {labelled({3, 4, 6}), 2, {labelled({2}), labelled({1, 5})}}};
  for (const auto& c : cases) {
    const auto t = run_forcing(g, c.z);
    const auto k = generic_kernel_rounds(g, c.z);
    const std::string name = "labels " + one_based(c.z);
    o.require(t.success, name + " forces");
    o.require(equal(t.iterations(), c.iterations), name + " iterations");
    o.require(t.derived == c.derived, name + " derived sets");
    o.require(k.solved && equal(k.rounds, c.iterations), name + " kernel rounds");
    json d = json::array();
    for (const auto& s : t.derived) d.push_back(s.members());
    o.payload["traces"].push_back(
        {{"initial", c.z.members()}, {"iterations", t.iterations()}, {"derived", d}, {"kernel_rounds", k.rounds}});
    o.notes.push_back(name + ": I_Z=" + std::to_string(t.iterations()) + ", kernel rounds " +
                      std::to_string(k.rounds));
  }
  return o;
}

Outcome bouquets(const SearchOptions& opts) {
  Outcome o;
  int count = 0;
  std::function<void(std::vector<int>&, int)> grow = [&](std::vector<int>& ks, int circles) {
    if (static_cast<int>(ks.size()) == circles) {
      const int n = circles;
      expect(o, opts, {Family::bouquet, ks}, n + 1, ceil_half(ks[n - 1] + ks[n - 2]) - 1);
      ++count;
      return;
    }
    for (int k = ks.empty() ? 2 : ks.back(); k <= 5; ++k) {
      ks.push_back(k);
      grow(ks, circles);
      ks.pop_back();
    }
  };
  for (int n = 2; n <= 3; ++n) {
    std::vector<int> ks;
    grow(ks, n);
  }
  o.notes.push_back(std::to_string(count) + " bouquets");
  return o;
}

void expect_bound(Outcome& o, const SearchOptions& opts, const FamilySpec& spec, int z, int i_upper) {
  const auto r = solve(build_family(spec), opts);
  o.payload["rows"].push_back(row(spec, r));
  const std::string name = describe(spec);
  if (z >= 0) o.require(equal(r.z, z), name + " Z=" + std::to_string(r.z) + " want " + std::to_string(z));
  o.require(r.i <= i_upper + kTolerance,
            name + " I=" + std::to_string(r.i) + " exceeds " + std::to_string(i_upper));
}

Outcome grid_variants(const SearchOptions& opts) {
  Outcome o;
  for (int s = 2; s <= 5; ++s)
    for (int t = s; t <= 5; ++t) expect_bound(o, opts, {Family::triangular_grid, {s, t}}, s, 2 * t + s - 4);
  for (int s = 2; s <= 5; ++s)
    for (int t = 2; t <= 5; ++t) expect_bound(o, opts, {Family::king_grid, {s, t}}, s + t - 1, s + t - 3);
  for (int t = 2; t <= 6; ++t) expect_bound(o, opts, {Family::king_grid, {3, t}}, -1, t - 1);
  o.notes.push_back(std::to_string(o.payload["rows"].size()) + " graphs");
  return o;
}

// Independent exhaustion: no k-subset of the graph forces. Neighbor masks and
// Gosper's hack, nothing from the solver.
bool some_subset_forces(const Graph& g, int k) {
  const int n = g.vertex_count();
  std::vector<std::uint32_t> nb(n, 0);
  for (auto [u, v] : g.edges()) {
    nb[u] |= 1u << v;
    nb[v] |= 1u << u;
  }
  const std::uint32_t all = (n == 32) ? ~0u : (1u << n) - 1;
  for (std::uint32_t s = (1u << k) - 1; s <= all && s != 0;) {
    std::uint32_t black = s;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint32_t rest = black; rest; rest &= rest - 1) {
        const std::uint32_t white = nb[__builtin_ctz(rest)] & ~black;
        if (white && !(white & (white - 1))) {
          black |= white;
          changed = true;
        }
      }
    }
    if (black == all) return true;
    const std::uint32_t c = s & -s;
    const std::uint32_t r = s + c;
    if (r == 0) break;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return false;
}

int cycle_product_upper(int s, int t) { return (s == t && s % 2 == 1) ? 2 * s - 1 : 2 * s; }

Outcome conjecture_cells(const SearchOptions& opts) {
  Outcome o;
  const std::map<std::pair<int, int>, std::pair<int, int>> exact{
      {{3, 3}, {5, -1}}, {{3, 4}, {6, 1}}, {{4, 4}, {8, 1}}, {{5, 5}, {9, -1}}};
  for (int s = 3; s <= 5; ++s) {
    for (int t = s; t <= 5; ++t) {
      const FamilySpec spec{Family::cycle_x_cycle, {s, t}};
      const Graph g = build_family(spec);
      const auto r = solve(g, opts);
      o.payload["rows"].push_back(row(spec, r));
      const std::string name = describe(spec);
      o.require(r.z <= cycle_product_upper(s, t), name + " above the upper bound");
      const auto it = exact.find({s, t});
      if (it != exact.end()) {
        o.require(equal(r.z, it->second.first), name + " Z=" + std::to_string(r.z));
        if (it->second.second >= 0) o.require(equal(r.i, it->second.second), name + " I=" + std::to_string(r.i));
      }
      o.notes.push_back(name + ": Z=" + std::to_string(r.z) + " I=" + std::to_string(r.i) +
                        " closures=" + std::to_string(r.closures));
    }
  }
  const Graph c55 = fam(Family::cycle_x_cycle, {5, 5});
  const bool size8 = some_subset_forces(c55, 8);
  o.require(!size8, "a size-8 subset of C5xC5 forces");
  o.notes.push_back("independent exhaustion of all " + std::to_string(binomial(25, 8)) +
                    " size-8 subsets of C5xC5: none forces");
  return o;
}

VertexSet random_subset(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution pick(p);
  VertexSet s(n);
  for (int v = 0; v < n; ++v)
    if (pick(rng)) s.insert(v);
  return s;
}

Graph random_graph(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> density(0.1, 0.8);
  std::bernoulli_distribution edge(density(rng));
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) es.emplace_back(u, v);
  return Graph(n, es);
}

Outcome properties(const SearchOptions& opts) {
  Outcome o;
  std::mt19937_64 rng(kPropertySeed);
  std::map<std::string, int> checked;
  int products = 0;
  for (int k = 0; k < kPropertyCases; ++k) {
    const int n = 2 + static_cast<int>(rng() % (kPropertyMaxVertices - 1));
    const Graph g = random_graph(rng, n);
    const std::string tag = "case " + std::to_string(k);
    const oracle::Adj adj(g);

    // Closure against the layer-by-layer oracle, and monotonicity.
    const VertexSet x = random_subset(rng, n, 0.35);
    const VertexSet cx = closure(g, x);
    o.require(oracle::mask_of(cx) == oracle::layers(adj, oracle::mask_of(x)).back(), tag + " closure");
    o.require(cx.is_subset_of(closure(g, x | random_subset(rng, n, 0.3))), tag + " monotone");
    checked["closure"]++;

    const auto r = solve(g, opts);
    const auto b = evaluate_bounds(g, r.z, r.i, path_cover_number(g));
    o.require(b.satisfied(), tag + " structural bounds");
    checked["bounds"]++;

    const auto sets = all_minimum_zfs(g, opts);
    const VertexSet z = sets[rng() % sets.size()];
    const int iz = forcing_iterations(g, z);
    const VertexSet sup = z | random_subset(rng, n, 0.3);
    o.require(is_zero_forcing_set(g, sup), tag + " superset forces");
    checked["superset"]++;

    for (const auto& d : run_forcing(g, z).derived) o.require(d.size() <= z.size(), tag + " |D| <= |Z|");
    checked["derived"]++;

    for (const auto& l : enumerate_chronological_lists(g, z, 16).lists)
      o.require(is_zero_forcing_set(g, reversal(l)), tag + " reversal forces");
    checked["reversal"]++;

    o.require(llfc(g, z).max_longest <= iz, tag + " LLFC <= I_Z");
    checked["llfc"]++;

    const auto kr = generic_kernel_rounds(g, x);
    const auto tx = run_forcing(g, x);
    o.require(kr.solved == tx.success && (!tx.success || kr.rounds == tx.iterations()), tag + " kernel");
    checked["kernel"]++;

    if (n <= kDeletionMaxVertices) {
      o.require(perturbation_check(g, opts).all_ok(), tag + " deletion sandwich");
      checked["deletion"]++;
    }
    if (k % 8 == 0) {
      const Graph h = random_graph(rng, 2 + static_cast<int>(rng() % 3));
      const Graph small = random_graph(rng, 2 + static_cast<int>(rng() % 3));
      o.require(check_product_bound(small, h, opts).ok, tag + " product inequality");
      ++products;
    }
  }
  std::string summary;
  for (const auto& [name, count] : checked) summary += name + "=" + std::to_string(count) + " ";
  o.notes.push_back(summary + "products=" + std::to_string(products) + " (seed " +
                    std::to_string(kPropertySeed) + ")");
  return o;
}

Outcome chain_gap_tree(const SearchOptions& opts) {
  Outcome o;
  constexpr int kVertices = 9;
  const ChainGapCriteria criteria;
  const auto trees = free_trees(kVertices);
  o.notes.push_back(std::to_string(trees.size()) + " free trees on 9 vertices");
  const auto found = find_chain_gap_trees(kVertices, criteria);
  o.require(!found.empty(), "no tree with Z=3, ten minimum sets, I=3 and LLFC=2 on every minimum set");

  // The ten listed minimum sets, 1-based.
  std::vector<VertexSet> listed;
  for (const auto& l : std::vector<std::vector<int>>{{1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5},
                                                     {2, 4, 9}, {2, 5, 9}, {3, 4, 5}, {3, 4, 9}, {3, 5, 9}}) {
    VertexSet z(kVertices);
    for (int k : l) z.insert(k - 1);
    listed.push_back(z);
  }

  // What the candidates actually look like.
  int index = 0;
  for (const Graph& t : trees) {
    const auto r = solve(t, opts);
    if (r.z != criteria.z || r.num_minimum_zfs != criteria.num_minimum_zfs) continue;
    ++index;
    const auto sets = all_minimum_zfs(t, opts);
    std::map<std::pair<int, int>, int> profile;  // (I_Z, LLFC) -> sets
    for (const auto& z : sets) {
      const auto c = llfc(t, z);
      if (c.min_longest != c.max_longest) o.notes.push_back("  min and max LLFC differ on " + z.to_string());
      profile[{forcing_iterations(t, z), c.max_longest}]++;
    }
    std::string line = "candidate " + std::to_string(index) + ": I=" + std::to_string(r.i) + ";";
    for (const auto& [key, count] : profile)
      line += " I_Z=" + std::to_string(key.first) + ", LLFC=" + std::to_string(key.second) + " on " +
              std::to_string(count) + " sets;";
    o.notes.push_back(line);

    const auto perm = find_relabeling(sets, listed);
    if (!perm) {
      o.notes.push_back("  minimum sets do not relabel onto the listed family");
      continue;
    }
    const Graph relabeled = relabel(t, *perm);
    std::string off;
    for (const auto& z : listed) {
      const auto c = llfc(relabeled, z);
      const int iz = forcing_iterations(relabeled, z);
      if (iz != criteria.i || c.max_longest != criteria.llfc) {
        off += " " + one_based(z) + ": I_Z=" + std::to_string(iz) + ", LLFC=" + std::to_string(c.max_longest) + ";";
      }
    }
    o.notes.push_back("  relabels onto the listed family; listed sets off target:" + (off.empty() ? " none" : off));
  }
  o.payload["found"] = found.size();
  return o;
}

using Criterion = std::function<Outcome(const SearchOptions&)>;

json deterministic_payloads(int workers) {
  SearchOptions opts;
  opts.workers = workers;
  json all = json::array();
  for (const Criterion& c : std::vector<Criterion>{closed_forms, products, c3k2_traces, bouquets,
                                                   grid_variants, conjecture_cells}) {
    all.push_back(c(opts).payload);
  }
  return all;
}

Outcome determinism(const SearchOptions&) {
  Outcome o;
  const std::string one = deterministic_payloads(1).dump();
  const std::string four = deterministic_payloads(4).dump();
  o.require(one == four, "payloads of criteria 1-6 differ between 1 and 4 workers");
  o.notes.push_back("criteria 1-6 payload: " + std::to_string(one.size()) + " bytes, identical");
  return o;
}

struct Entry {
  int id;
  std::string name;
  double limit_seconds;
  Criterion run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  int workers = 1;
  app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 9));
  app.add_option("--workers", workers, "search threads")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  const std::vector<Entry> entries{
      {1, "closed forms for paths, cycles, complete and complete bipartite graphs", 60, closed_forms},
      {2, "Cartesian product iteration indices", 120, products},
      {3, "iteration traces on C3 x K2", 10, c3k2_traces},
      {4, "bouquets of circles", 60, bouquets},
      {5, "triangular and king grids", 180, grid_variants},
      {6, "cycle product sweep up to C5 x C5", 300, conjecture_cells},
      {7, "randomized property suites", 300, properties},
      {8, "tree with longest forcing chain shorter than I", 120, chain_gap_tree},
      {9, "determinism across worker counts", 600, determinism},
  };

  SearchOptions opts;
  opts.workers = workers;
  bool all_pass = true;
  for (const auto& e : entries) {
    if (only && e.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o = e.run(opts);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > e.limit_seconds) {
      o.pass = false;
      o.notes.push_back("runtime limit exceeded");
    }
    all_pass = all_pass && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << e.id << ": " << e.name << " ("
              << std::fixed;
    std::cout.precision(2);
    std::cout << seconds << " s, limit " << static_cast<int>(e.limit_seconds) << " s)\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
  }
  return all_pass ? 0 : 1;
}
