#include "zforce/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>
#include <type_traits>
#include <utility>

#include "zforce/errors.hpp"

namespace zf {
namespace {

using Word = std::uint64_t;
using Wide = bits::Wide;
__extension__ typedef unsigned __int128 u128;

// Open neighborhoods as raw masks plus the two rule evaluations the search needs.
template <class Mask>
class Kernel {
 public:
  explicit Kernel(const Graph& g)
      : n_(g.vertex_count()), all_(bits::universe<Mask>(n_)),
        nbr_(static_cast<std::size_t>(n_)) {
    for (int v = 0; v < n_; ++v) {
      g.neighbors(v).for_each([&](int w) { bits::set(nbr_[static_cast<std::size_t>(v)], w); });
    }
  }

  int size() const { return n_; }

  // Sequential closure; `active` holds black vertices that may still force.
  bool forces(Mask black) const {
    Mask active = black;
    bool progress = true;
    while (progress && !(black == all_)) {
      progress = false;
      const Mask snapshot = active;
      bits::for_each(snapshot, [&](int u) {
        const Mask white = nbr_[static_cast<std::size_t>(u)] & ~black;
        if (bits::none(white)) {
          bits::reset(active, u);
        } else if (bits::single(white)) {
          black |= white;
          bits::reset(active, u);
          bits::set(active, bits::lowest(white));
          progress = true;
        }
      });
    }
    return black == all_;
  }

  // Synchronous steps to reach all vertices, or -1.
  int iterations(Mask black) const {
    int steps = 0;
    while (!(black == all_)) {
      Mask add{};
      bits::for_each(black, [&](int u) {
        const Mask white = nbr_[static_cast<std::size_t>(u)] & ~black;
        if (bits::single(white)) add |= white;
      });
      if (bits::none(add)) return -1;
      black |= add;
      ++steps;
    }
    return steps;
  }

 private:
  int n_;
  Mask all_;
  std::vector<Mask> nbr_;
};

// Visits every subset of size r of bits [0, h), OR-ed with `prefix`, in
// ascending order. Stops early when `f` returns false; returns whether the
// walk completed.
template <class F>
bool for_each_subset(int h, int r, Word prefix, F&& f) {
  if (r > h) return true;
  if (r == 0) return f(prefix);
  const Word limit = Word{1} << h;
  Word x = (Word{1} << r) - 1;
  while (x < limit) {
    if (!f(prefix | x)) return false;
    const Word u = x & (~x + 1);
    const Word v = x + u;
    x = v + (((v ^ x) / u) >> 2);
  }
  return true;
}

template <class F>
bool for_each_subset(int h, int r, const Wide& prefix, F&& f) {
  if (r > h) return true;
  std::vector<int> c(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) c[static_cast<std::size_t>(i)] = i;
  for (;;) {
    Wide m = prefix;
    for (int i : c) bits::set(m, i);
    if (!f(m)) return false;
    int j = 0;
    while (j < r) {
      const int bound = j + 1 < r ? c[static_cast<std::size_t>(j + 1)] : h;
      if (c[static_cast<std::size_t>(j)] + 1 < bound) break;
      ++j;
    }
    if (j == r) return true;
    ++c[static_cast<std::size_t>(j)];
    for (int i = 0; i < j; ++i) c[static_cast<std::size_t>(i)] = i;
  }
}

template <class Mask>
Mask single_bit(int h) {
  Mask m{};
  bits::set(m, h);
  return m;
}

// Runs job(k) for k in [0, count) on `workers` threads pulling indices in
// ascending order.
template <class Job>
void run_buckets(int count, int workers, Job&& job) {
  if (count <= 0) return;
  workers = std::clamp(workers, 1, count);
  if (workers == 1) {
    for (int k = 0; k < count; ++k) job(k);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int k = next.fetch_add(1); k < count; k = next.fetch_add(1)) job(k);
    });
  }
  for (auto& t : pool) t.join();
}

void atomic_min(std::atomic<int>& cell, int value) {
  int cur = cell.load();
  while (value < cur && !cell.compare_exchange_weak(cur, value)) {
  }
}

unsigned long long saturating_add(unsigned long long a, unsigned long long b) {
  return a > std::numeric_limits<unsigned long long>::max() - b
             ? std::numeric_limits<unsigned long long>::max()
             : a + b;
}

unsigned long long saturating_mul(unsigned long long a, unsigned long long b) {
  if (a != 0 && b > std::numeric_limits<unsigned long long>::max() / a) {
    return std::numeric_limits<unsigned long long>::max();
  }
  return a * b;
}

struct Budget {
  unsigned long long limit;
  unsigned long long spent = 0;

  void reserve(int n, int s) {
    const unsigned long long need = binomial(n, s);
    if (saturating_add(spent, need) > limit) throw BudgetExceeded(s, spent, limit);
  }
};

// Subsets of size s are split by their highest set bit h (bucket h - s + 1),
// so bucket order is ascending bit order.
template <class Mask>
struct FirstHit {
  std::optional<Mask> witness;
  unsigned long long closures = 0;
};

template <class Mask>
FirstHit<Mask> find_first(const Kernel<Mask>& k, int s, int workers) {
  const int n = k.size();
  FirstHit<Mask> out;
  if (s == 0) {
    out.closures = 1;
    if (k.forces(Mask{})) out.witness = Mask{};
    return out;
  }
  const int buckets = n - s + 1;
  std::vector<std::optional<Mask>> found(static_cast<std::size_t>(std::max(buckets, 0)));
  std::vector<unsigned long long> position(found.size(), 0);
  std::atomic<int> best{std::numeric_limits<int>::max()};
  run_buckets(buckets, workers, [&](int b) {
    if (b > best.load()) return;
    const int h = s - 1 + b;
    unsigned long long seen = 0;
    for_each_subset(h, s - 1, single_bit<Mask>(h), [&](const Mask& m) {
      if ((seen & 0xfff) == 0 && b > best.load()) return false;
      ++seen;
      if (k.forces(m)) {
        found[static_cast<std::size_t>(b)] = m;
        position[static_cast<std::size_t>(b)] = seen;
        atomic_min(best, b);
        return false;
      }
      return true;
    });
  });
  for (int b = 0; b < buckets; ++b) {
    const auto sb = static_cast<std::size_t>(b);
    if (found[sb]) {
      out.witness = found[sb];
      out.closures = saturating_add(out.closures, position[sb]);
      return out;
    }
    out.closures = saturating_add(out.closures, binomial(s - 1 + b, s - 1));
  }
  return out;
}

template <class Mask>
struct Level {
  std::vector<std::pair<Mask, int>> sets;  // forcing sets with their iteration counts
  unsigned long long closures = 0;
};

template <class Mask>
Level<Mask> collect_all(const Kernel<Mask>& k, int s, int workers) {
  const int n = k.size();
  Level<Mask> out;
  if (s == 0) {
    out.closures = 1;
    if (k.forces(Mask{})) out.sets.emplace_back(Mask{}, 0);
    return out;
  }
  const int buckets = n - s + 1;
  std::vector<std::vector<std::pair<Mask, int>>> per(static_cast<std::size_t>(std::max(buckets, 0)));
  run_buckets(buckets, workers, [&](int b) {
    const int h = s - 1 + b;
    auto& dst = per[static_cast<std::size_t>(b)];
    for_each_subset(h, s - 1, single_bit<Mask>(h), [&](const Mask& m) {
      if (k.forces(m)) dst.emplace_back(m, k.iterations(m));
      return true;
    });
  });
  for (auto& v : per) out.sets.insert(out.sets.end(), v.begin(), v.end());
  out.closures = binomial(n, s);
  return out;
}

int min_degree(const Graph& g) {
  int d = std::numeric_limits<int>::max();
  for (int v = 0; v < g.vertex_count(); ++v) d = std::min(d, g.degree(v));
  return g.vertex_count() == 0 ? 0 : d;
}

template <class Mask>
VertexSet to_set(int n, const Mask& m) {
  if constexpr (std::is_same_v<Mask, Word>) {
    return VertexSet::from_word(n, m);
  } else {
    return VertexSet::from_bits(n, m);
  }
}

template <class F>
decltype(auto) with_mask(int n, F&& f) {
  if (n <= 64) return f(std::type_identity<Word>{});
  return f(std::type_identity<Wide>{});
}

// Per-component pieces, in the component's local numbering.
struct ComponentSolve {
  int z = 0;
  std::vector<std::pair<VertexSet, int>> minimum;  // ascending, with I_Z
  int i = 0;
};

ComponentSolve solve_component(const Graph& g, Budget& budget, int workers) {
  return with_mask(g.vertex_count(), [&](auto tag) {
    using Mask = typename decltype(tag)::type;
    const Kernel<Mask> k(g);
    const int n = g.vertex_count();
    for (int s = min_degree(g); s <= n; ++s) {
      budget.reserve(n, s);
      auto level = collect_all(k, s, workers);
      budget.spent = saturating_add(budget.spent, level.closures);
      if (level.sets.empty()) continue;
      ComponentSolve out;
      out.z = s;
      out.i = std::numeric_limits<int>::max();
      for (const auto& [m, it] : level.sets) {
        out.minimum.emplace_back(to_set(n, m), it);
        out.i = std::min(out.i, it);
      }
      return out;
    }
    throw std::logic_error("the full vertex set must force");
  });
}

std::vector<VertexSet> pieces(const Graph& g, const SearchOptions& opts) {
  if (opts.split_components && g.vertex_count() > 0) return g.components();
  return {VertexSet::full(g.vertex_count())};
}

// Maps a local set of the induced subgraph on `comp` back to g's numbering.
VertexSet lift(const VertexSet& local, const VertexSet& comp) {
  const auto members = comp.members();
  VertexSet out(comp.universe_size());
  local.for_each([&](int v) { out.insert(members[static_cast<std::size_t>(v)]); });
  return out;
}

}  // namespace

unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  constexpr auto cap = static_cast<u128>(std::numeric_limits<unsigned long long>::max());
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > cap) return std::numeric_limits<unsigned long long>::max();
  }
  return static_cast<unsigned long long>(r);
}

ZeroForcingResult zero_forcing_number(const Graph& g, const SearchOptions& opts) {
  ZeroForcingResult out;
  out.witness = VertexSet(g.vertex_count());
  Budget budget{opts.budget};
  for (const auto& comp : pieces(g, opts)) {
    const Graph local = g.induced(comp);
    const int n = local.vertex_count();
    with_mask(n, [&](auto tag) {
      using Mask = typename decltype(tag)::type;
      const Kernel<Mask> k(local);
      for (int s = min_degree(local); s <= n; ++s) {
        budget.reserve(n, s);
        auto hit = find_first(k, s, opts.workers);
        budget.spent = saturating_add(budget.spent, hit.closures);
        if (!hit.witness) continue;
        out.z += s;
        out.witness |= lift(to_set(n, *hit.witness), comp);
        return;
      }
      throw std::logic_error("the full vertex set must force");
    });
  }
  out.closures = budget.spent;
  return out;
}

namespace {

struct Solved {
  SolveResult result;
  std::vector<VertexSet> comps;
  std::vector<ComponentSolve> parts;
};

Solved solve_parts(const Graph& g, const SearchOptions& opts) {
  Solved s;
  Budget budget{opts.budget};
  s.comps = pieces(g, opts);
  auto& r = s.result;
  r.zfs_witness = VertexSet(g.vertex_count());
  r.ii_witness = VertexSet(g.vertex_count());
  r.num_minimum_zfs = 1;
  for (const auto& comp : s.comps) {
    s.parts.push_back(solve_component(g.induced(comp), budget, opts.workers));
    const auto& part = s.parts.back();
    r.z += part.z;
    r.i = std::max(r.i, part.i);
    r.zfs_witness |= lift(part.minimum.front().first, comp);
    r.num_minimum_zfs = saturating_mul(r.num_minimum_zfs, part.minimum.size());
  }
  // The least set reaching I(G) takes, per component, the least Z-set
  // whose own iteration count fits under I(G).
  for (std::size_t c = 0; c < s.comps.size(); ++c) {
    for (const auto& [set, it] : s.parts[c].minimum) {
      if (it <= r.i) {
        r.ii_witness |= lift(set, s.comps[c]);
        break;
      }
    }
  }
  r.closures = budget.spent;
  r.components = static_cast<int>(s.comps.size());
  return s;
}

}  // namespace

SolveResult solve(const Graph& g, const SearchOptions& opts) {
  return solve_parts(g, opts).result;
}

std::vector<VertexSet> all_minimum_zfs(const Graph& g, const SearchOptions& opts) {
  auto s = solve_parts(g, opts);
  constexpr unsigned long long kMaxListed = 10'000'000;
  if (s.result.num_minimum_zfs > kMaxListed) {
    throw std::length_error(std::to_string(s.result.num_minimum_zfs) +
                            " minimum zero forcing sets are too many to list");
  }
  std::vector<VertexSet> out{VertexSet(g.vertex_count())};
  for (std::size_t c = 0; c < s.comps.size(); ++c) {
    std::vector<VertexSet> next;
    next.reserve(out.size() * s.parts[c].minimum.size());
    for (const auto& base : out) {
      for (const auto& [set, it] : s.parts[c].minimum) next.push_back(base | lift(set, s.comps[c]));
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

IterationIndexResult iteration_index(const Graph& g, const SearchOptions& opts) {
  auto r = solve(g, opts);
  return {r.i, r.ii_witness};
}

int forcing_iterations(const Graph& g, const VertexSet& z) {
  if (z.universe_size() != g.vertex_count()) {
    throw std::invalid_argument("vertex set does not belong to this graph");
  }
  return with_mask(g.vertex_count(), [&](auto tag) {
    using Mask = typename decltype(tag)::type;
    const Kernel<Mask> k(g);
    if constexpr (std::is_same_v<Mask, Word>) {
      return k.iterations(z.word());
    } else {
      return k.iterations(z.raw());
    }
  });
}

}  // namespace zf
