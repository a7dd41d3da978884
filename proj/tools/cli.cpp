#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "zforce/chronology.hpp"
#include "zforce/conjecture.hpp"
#include "zforce/edge_list.hpp"
#include "zforce/errors.hpp"
#include "zforce/expected.hpp"
#include "zforce/families.hpp"
#include "zforce/forcing.hpp"
#include "zforce/kernel.hpp"
#include "zforce/render.hpp"
#include "zforce/report.hpp"
#include "zforce/set_syntax.hpp"
#include "zforce/witness.hpp"

namespace zf::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  std::string params;
  std::string graph_path;
  std::string s_range;
  std::string t_range;
  std::string set;
  std::string format = "text";
  std::optional<unsigned long long> budget;
  int workers = 1;
  std::size_t list_cap = kDefaultListCap;
  std::uint64_t seed = 0;
  int sample = 0;
  int max = 0;
  bool timing = false;
  bool forces = false;
  bool show_llfc = false;
  bool witness = false;
};

unsigned long long parse_budget_env() {
  const char* env = std::getenv("ZF_BUDGET");
  if (!env || !*env) return kDefaultClosureBudget;
  const std::string_view s(env);
  unsigned long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v == 0) {
    throw UsageError("ZF_BUDGET must be a positive integer, got '" + std::string(s) + "'");
  }
  return v;
}

SearchOptions search_options(const Options& o) {
  SearchOptions s;
  s.budget = o.budget ? *o.budget : parse_budget_env();
  s.workers = o.workers;
  return s;
}

struct Source {
  Graph graph;
  std::optional<FamilySpec> spec;
  std::vector<std::string> warnings;
  std::string name;
};

Family family_arg(const std::string& name) {
  auto f = parse_family(name);
  if (!f || *f == Family::edge_list) {
    std::string known;
    for (Family k : all_families()) {
      if (k == Family::edge_list) continue;
      known += (known.empty() ? "" : ", ") + family_name(k);
    }
    throw UsageError("unknown family '" + name + "' (known: " + known + ")");
  }
  return *f;
}

Source load_source(const Options& o) {
  const bool has_family = !o.family.empty();
  const bool has_file = !o.graph_path.empty();
  if (has_family == has_file) throw UsageError("give exactly one of --family or --graph");
  Source src;
  if (has_file) {
    try {
      auto parsed = read_edge_list_file(o.graph_path);
      src.graph = std::move(parsed.graph);
      src.warnings = std::move(parsed.warnings);
    } catch (const std::exception& e) {
      throw UsageError(o.graph_path + ": " + e.what());
    }
    src.name = o.graph_path;
    return src;
  }
  if (o.params.empty()) throw UsageError("--family needs --params");
  FamilySpec spec{family_arg(o.family), parse_int_list(o.params)};
  validate(spec);
  src.graph = build_family(spec);
  src.spec = spec;
  src.name = describe(spec);
  return src;
}

std::string show_set(const Graph& g, const VertexSet& s) {
  std::string ids = s.to_string();
  if (!g.has_labels()) return ids;
  return ids + " = " + labeled(g, s);
}

std::string ms_text(double ms) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(3) << ms;
  return o.str();
}

// compute ------------------------------------------------------------------

std::string bounds_text(const BoundsReport& b) {
  std::ostringstream o;
  o << "delta=" << b.min_degree << " <= Z";
  if (b.path_cover) o << ", P=" << *b.path_cover << " <= Z";
  if (b.has_edge) o << ", " << b.i_lower << " <= I <= " << b.i_upper;
  o << ": " << (b.satisfied() ? "ok" : "VIOLATED");
  return o.str();
}

int cmd_compute(const Options& o, std::ostream& out) {
  const Source src = load_source(o);
  ReportOptions ro;
  ro.search = search_options(o);
  InvariantReport r = compute_report(src.graph, src.spec, ro);
  r.warnings.insert(r.warnings.begin(), src.warnings.begin(), src.warnings.end());

  if (o.format == "json") {
    out << report_to_json(r, o.timing).dump(2) << "\n";
  } else if (o.format == "csv") {
    out << report_csv_header() << "\n" << report_csv_row(r, o.timing) << "\n";
  } else {
    out << "graph: " << src.name << "  n=" << r.vertices << " m=" << r.edges << "\n";
    out << "Z = " << r.z << "\n";
    out << "I = " << r.i << "\n";
    out << "minimum zero forcing sets: " << r.num_min_zfs << "\n";
    out << "least Z-set: " << show_set(src.graph, r.zfs_witness) << "\n";
    out << "least Z-set attaining I: " << show_set(src.graph, r.ii_witness) << "\n";
    if (r.components > 1) out << "components: " << r.components << "\n";
    out << "bounds: " << bounds_text(r.bounds) << "\n";
    if (r.expected && r.expected->has_value()) {
      out << "expected: " << r.expected->source << ": "
          << (r.match ? (*r.match ? "match" : "MISMATCH") : "n/a") << "\n";
    }
    for (const auto& w : r.warnings) out << "warning: " << w << "\n";
    out << "closures: " << r.closures << "\n";
    if (o.timing) out << "time: " << ms_text(r.total_ms) << " ms\n";
  }
  return r.match && !*r.match ? ExitCode::mismatch : ExitCode::ok;
}

// verify -------------------------------------------------------------------

int param_count(Family f) {
  switch (f) {
    case Family::path:
    case Family::cycle:
    case Family::complete:
      return 1;
    case Family::bouquet:
      return -1;
    default:
      return 2;
  }
}

void nondecreasing_tuples(int len, int lo, int hi, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  for (int k = cur.empty() ? lo : cur.back(); k <= hi; ++k) {
    cur.push_back(k);
    nondecreasing_tuples(len, lo, hi, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> verify_tuples(Family f, const Options& o) {
  if (!o.params.empty()) {
    if (!o.s_range.empty() || !o.t_range.empty()) {
      throw UsageError("give either --params or --s/--t ranges");
    }
    return {parse_int_list(o.params)};
  }
  std::vector<std::vector<int>> out;
  const int arity = param_count(f);
  if (arity == 1) {
    if (o.s_range.empty()) throw UsageError(family_name(f) + " takes its size range from --s");
    if (!o.t_range.empty()) throw UsageError(family_name(f) + " has one parameter; drop --t");
    const auto [lo, hi] = parse_range(o.s_range);
    for (int n = lo; n <= hi; ++n) out.push_back({n});
    return out;
  }
  if (o.s_range.empty() || o.t_range.empty()) {
    throw UsageError(arity < 0 ? "bouquet needs --s (circle counts) and --t (circle sizes)"
                               : family_name(f) + " needs --s and --t ranges");
  }
  const auto [s_lo, s_hi] = parse_range(o.s_range);
  const auto [t_lo, t_hi] = parse_range(o.t_range);
  if (arity < 0) {
    for (int c = s_lo; c <= s_hi; ++c) {
      std::vector<int> cur;
      nondecreasing_tuples(c, t_lo, t_hi, cur, out);
    }
    return out;
  }
  for (int s = s_lo; s <= s_hi; ++s)
    for (int t = t_lo; t <= t_hi; ++t) out.push_back({s, t});
  return out;
}

// Seeded spot checks of engine identities on random initial sets.
int sample_failures(const Graph& g, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = g.vertex_count();
  int failures = 0;
  for (int k = 0; k < count; ++k) {
    VertexSet z(n);
    VertexSet more(n);
    for (int v = 0; v < n; ++v) {
      if (rng() % 3 == 0) z.insert(v);
      if (rng() % 4 == 0) more.insert(v);
    }
    const auto trace = run_forcing(g, z);
    const auto cl = closure(g, z);
    bool ok = cl == trace.final_set() && closure(g, cl) == cl;
    ok = ok && cl.is_subset_of(closure(g, z | more));
    const auto kr = generic_kernel_rounds(g, z);
    ok = ok && kr.solved == trace.success && kr.rounds == trace.iterations();
    if (trace.success) {
      for (const auto& d : trace.derived) ok = ok && d.size() <= z.size();
      ok = ok && is_zero_forcing_set(g, reversal(canonical_list(g, z)));
    }
    if (!ok) ++failures;
  }
  return failures;
}

struct VerifyRow {
  FamilySpec spec;
  int vertices = 0;
  std::optional<int> z;
  std::optional<int> i;
  std::optional<ExpectedInvariants> expected;
  std::string status;  // match | mismatch | no_value | refused
  std::string note;
  double ms = 0.0;
};

std::string expect_text(const std::optional<int>& exact, const std::optional<int>& upper) {
  if (exact) return "=" + std::to_string(*exact);
  if (upper) return "<=" + std::to_string(*upper);
  return "-";
}

nlohmann::json opt_json(const std::optional<int>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.family.empty()) throw UsageError("verify needs --family");
  if (!o.graph_path.empty()) throw UsageError("verify works on families, not --graph");
  const Family f = family_arg(o.family);
  const auto tuples = verify_tuples(f, o);
  ReportOptions ro;
  ro.search = search_options(o);

  std::vector<VerifyRow> rows;
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    VerifyRow row;
    row.spec = {f, tuples[k]};
    try {
      validate(row.spec);
    } catch (const ParameterError& e) {
      row.status = "no_value";
      row.note = e.what();
      rows.push_back(row);
      continue;
    }
    row.expected = expected_invariants(row.spec);
    if (!row.expected->has_value()) {
      row.status = "no_value";
      row.note = "no closed form for these parameters";
      rows.push_back(row);
      continue;
    }
    const Graph g = build_family(row.spec);
    row.vertices = g.vertex_count();
    try {
      const auto r = compute_report(g, row.spec, ro);
      row.z = r.z;
      row.i = r.i;
      row.ms = r.total_ms;
      row.status = r.match.value_or(false) ? "match" : "mismatch";
      if (const auto w = proof_witness(row.spec); w && w->set.size() == r.z && w->claimed_iterations &&
                                                  *w->claimed_iterations < r.i) {
        row.status = "mismatch";
        row.note = "construction beats the computed I";
      }
      if (o.sample > 0) {
        const int bad = sample_failures(g, o.sample, o.seed + k);
        if (bad) {
          row.status = "mismatch";
          row.note = std::to_string(bad) + " sampled sets broke an engine identity";
        }
      }
    } catch (const BudgetExceeded& e) {
      row.status = "refused";
      row.note = "Z >= " + std::to_string(e.lower_bound());
    } catch (const std::logic_error& e) {
      row.status = "mismatch";
      row.note = e.what();
    }
    rows.push_back(row);
  }

  int n_match = 0;
  int n_mismatch = 0;
  int n_none = 0;
  int n_refused = 0;
  for (const auto& r : rows) {
    n_match += r.status == "match";
    n_mismatch += r.status == "mismatch";
    n_none += r.status == "no_value";
    n_refused += r.status == "refused";
  }

  if (o.format == "json") {
    nlohmann::json j;
    j["family"] = family_name(f);
    auto arr = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json x;
      x["params"] = r.spec.params;
      x["n"] = r.vertices;
      x["z"] = opt_json(r.z);
      x["i"] = opt_json(r.i);
      if (r.expected) {
        x["expected"] = {{"z", opt_json(r.expected->z)},
                         {"z_upper", opt_json(r.expected->z_upper)},
                         {"i", opt_json(r.expected->i)},
                         {"i_upper", opt_json(r.expected->i_upper)},
                         {"source", r.expected->source}};
      } else {
        x["expected"] = nullptr;
      }
      x["status"] = r.status;
      x["note"] = r.note;
      if (o.timing) x["timing_ms"] = r.ms;
      arr.push_back(std::move(x));
    }
    j["rows"] = std::move(arr);
    j["summary"] = {{"rows", rows.size()},
                    {"match", n_match},
                    {"mismatch", n_mismatch},
                    {"no_value", n_none},
                    {"refused", n_refused}};
    out << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << "family,params,n,z,i,expected_z,expected_z_upper,expected_i,expected_i_upper,status,"
           "timing_ms\n";
    auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
    for (const auto& r : rows) {
      std::string params;
      for (std::size_t k = 0; k < r.spec.params.size(); ++k) {
        params += (k ? " " : "") + std::to_string(r.spec.params[k]);
      }
      const ExpectedInvariants e = r.expected.value_or(ExpectedInvariants{});
      out << family_name(f) << "," << params << "," << r.vertices << "," << opt(r.z) << ","
          << opt(r.i) << "," << opt(e.z) << "," << opt(e.z_upper) << "," << opt(e.i) << ","
          << opt(e.i_upper) << "," << r.status << "," << (o.timing ? ms_text(r.ms) : "") << "\n";
    }
  } else {
    out << std::left << std::setw(26) << "graph" << std::setw(6) << "n" << std::setw(6) << "Z"
        << std::setw(8) << "exp Z" << std::setw(6) << "I" << std::setw(8) << "exp I"
        << "status\n";
    for (const auto& r : rows) {
      const ExpectedInvariants e = r.expected.value_or(ExpectedInvariants{});
      out << std::setw(26) << describe(r.spec) << std::setw(6)
          << (r.vertices ? std::to_string(r.vertices) : "-") << std::setw(6)
          << (r.z ? std::to_string(*r.z) : "-") << std::setw(8) << expect_text(e.z, e.z_upper)
          << std::setw(6) << (r.i ? std::to_string(*r.i) : "-") << std::setw(8)
          << expect_text(e.i, e.i_upper) << r.status;
      if (!r.note.empty()) out << " (" << r.note << ")";
      if (o.timing && r.z) out << " " << ms_text(r.ms) << " ms";
      out << "\n";
    }
    out << "rows: " << rows.size() << "  match: " << n_match << "  mismatch: " << n_mismatch
        << "  no value: " << n_none << "  refused: " << n_refused << "\n";
  }
  if (n_mismatch) return ExitCode::mismatch;
  if (n_refused) return ExitCode::budget_refused;
  return ExitCode::ok;
}

// conjecture ---------------------------------------------------------------

int cmd_conjecture(const Options& o, std::ostream& out) {
  int s_lo = 3;
  int s_hi = 0;
  int t_lo = 3;
  int t_hi = 0;
  if (o.max > 0) {
    if (!o.s_range.empty() || !o.t_range.empty()) throw UsageError("give either --max or --s/--t");
    s_hi = t_hi = o.max;
  } else if (!o.s_range.empty() && !o.t_range.empty()) {
    std::tie(s_lo, s_hi) = parse_range(o.s_range);
    std::tie(t_lo, t_hi) = parse_range(o.t_range);
  } else {
    throw UsageError("conjecture needs --max or both --s and --t");
  }
  if (s_hi < 3 || t_hi < 3) throw UsageError("cycle sizes start at 3");
  const auto cells = conjecture_sweep(s_lo, s_hi, t_lo, t_hi, search_options(o));

  bool bound_ok = true;
  for (const auto& c : cells) bound_ok = bound_ok && c.within_upper_bound;

  if (o.format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& c : cells) arr.push_back(conjecture_to_json(c, o.timing));
    out << nlohmann::json{{"cells", arr}}.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << conjecture_csv_header() << "\n";
    for (const auto& c : cells) out << conjecture_csv_row(c, o.timing) << "\n";
  } else {
    out << std::left << std::setw(4) << "s" << std::setw(4) << "t" << std::setw(6) << "n"
        << std::setw(5) << "Z" << std::setw(5) << "I" << std::setw(18) << "conjectured"
        << "status\n";
    for (const auto& c : cells) {
      const bool odd_square = c.s == c.t && c.s % 2 == 1;
      const std::string conj =
          std::to_string(c.conjectured_z) + (odd_square ? " (2s-1)" : " (2s)");
      out << std::setw(4) << c.s << std::setw(4) << c.t << std::setw(6) << c.vertices
          << std::setw(5) << (c.z ? std::to_string(*c.z) : "-") << std::setw(5)
          << (c.i ? std::to_string(*c.i) : "-") << std::setw(18) << conj << status_name(c.status);
      if (c.z_lower) out << " (Z >= " << *c.z_lower << ")";
      if (!c.within_upper_bound) out << " UPPER BOUND VIOLATED";
      if (o.timing) out << " " << ms_text(c.elapsed_ms) << " ms";
      out << "\n";
    }
  }
  return bound_ok ? ExitCode::ok : ExitCode::mismatch;
}

// trace --------------------------------------------------------------------

int cmd_trace(const Options& o, std::ostream& out) {
  const Source src = load_source(o);
  const Graph& g = src.graph;
  if (o.witness == !o.set.empty()) throw UsageError("give exactly one of --set or --witness");
  VertexSet z;
  std::string construction;
  if (o.witness) {
    if (!src.spec) throw UsageError("--witness needs --family");
    const auto w = proof_witness(*src.spec);
    if (!w) throw UsageError("no construction known for " + src.name);
    z = w->set;
    construction = w->construction;
  } else {
    z = parse_vertex_set(g, o.set);
  }

  const ForcingTrace trace = run_forcing(g, z);
  std::optional<ChronologicalList> list;
  std::optional<LlfcResult> chains;
  if (trace.success && o.forces) list = canonical_list(g, z);
  if (trace.success && o.show_llfc) chains = llfc(g, z);

  if (o.format == "json") {
    nlohmann::json j = trace_to_json(g, trace);
    if (!construction.empty()) j["construction"] = construction;
    if (list) {
      auto arr = nlohmann::json::array();
      for (const Force& f : list->forces) arr.push_back({f.source, f.target});
      j["forces"] = std::move(arr);
    }
    if (chains) {
      j["llfc"] = {{"min", chains->min_longest},
                   {"max", chains->max_longest},
                   {"lists", chains->lists}};
    }
    out << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << "vertex,label,first_black_step\n";
    const auto steps = trace.first_black_step();
    for (int v = 0; v < g.vertex_count(); ++v) {
      out << v << ",\"" << g.label(v) << "\"," << steps[static_cast<std::size_t>(v)] << "\n";
    }
  } else {
    out << "graph: " << src.name << "\n";
    if (!construction.empty()) out << "construction: " << construction << "\n";
    out << render_trace_text(g, trace, src.spec ? grid_shape(*src.spec) : std::nullopt);
    if (o.forces) {
      if (list) {
        out << "forces (one chronological list):\n" << render_forces(g, *list);
      } else {
        out << "forces: none, the set does not force the whole graph\n";
      }
    }
    if (o.show_llfc && chains) {
      out << "longest forcing chain over " << chains->lists << " lists: min " << chains->min_longest
          << ", max " << chains->max_longest << "\n";
    }
  }
  return ExitCode::ok;
}

void add_common(CLI::App* app, Options& o, bool source, bool ranges) {
  if (source) {
    app->add_option("--family", o.family, "graph family, e.g. cycle, grid, bouquet");
    app->add_option("--params", o.params, "family parameters, e.g. 2,3,4");
    app->add_option("--graph", o.graph_path, "edge-list file (first line: n m)");
  }
  if (ranges) {
    app->add_option("--s", o.s_range, "first parameter range a..b");
    app->add_option("--t", o.t_range, "second parameter range a..b");
  }
  app->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app->add_option("--budget", o.budget, "closure budget (default 2^31, or ZF_BUDGET)")
      ->check(CLI::PositiveNumber);
  app->add_option("--workers", o.workers, "search threads")->check(CLI::PositiveNumber);
  app->add_option("--list-cap", o.list_cap, "maximum chronological lists to enumerate")
      ->check(CLI::PositiveNumber);
  app->add_option("--seed", o.seed, "seed for randomized sampling");
  app->add_flag("--timing", o.timing, "include wall-clock timings in the output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero forcing number and iteration index by exact search", "zforce"};
  app.require_subcommand(1);
  Options o;

  auto* compute = app.add_subcommand("compute", "Z, I, witnesses and bounds of one graph");
  add_common(compute, o, true, false);

  auto* verify = app.add_subcommand("verify", "compare a family against its closed forms");
  add_common(verify, o, true, true);
  verify->add_option("--sample", o.sample, "random initial sets to spot-check per graph")
      ->check(CLI::NonNegativeNumber);

  auto* conjecture = app.add_subcommand("conjecture", "exact Z of C_s x C_t against 2s-1 / 2s");
  add_common(conjecture, o, false, true);
  conjecture->add_option("--max", o.max, "sweep 3 <= s <= t <= max");

  auto* trace = app.add_subcommand("trace", "step-by-step forcing from an initial set");
  add_common(trace, o, true, false);
  trace->add_option("--set", o.set, "initial black set: ids or labels, e.g. 0,3 or (1,1),(2,1)");
  trace->add_flag("--witness", o.witness, "start from the family's explicit construction");
  trace->add_flag("--forces", o.forces, "print one chronological list of forces");
  trace->add_flag("--llfc", o.show_llfc, "longest forcing chain over all chronological lists");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::usage;
  }

  try {
    if (compute->parsed()) return cmd_compute(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (conjecture->parsed()) return cmd_conjecture(o, out);
    return cmd_trace(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << "\n";
    return ExitCode::budget_refused;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::mismatch;
  }
}

}  // namespace zf::cli
