#include "zforce/report.hpp"

#include <chrono>
#include <cstdio>

#include "zforce/path_cover.hpp"
#include "zforce/render.hpp"

namespace zf {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

nlohmann::json opt_json(const std::optional<int>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::string joined(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(xs[k]);
  }
  return s;
}

}  // namespace

InvariantReport compute_report(const Graph& g, const std::optional<FamilySpec>& spec,
                               const ReportOptions& opts) {
  const auto t0 = Clock::now();
  InvariantReport r;
  if (spec) {
    r.family = family_name(spec->family);
    r.params = spec->params;
  }
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.warnings = g.validate();

  const auto ts = Clock::now();
  const SolveResult s = solve(g, opts.search);
  r.search_ms = ms_since(ts);
  r.z = s.z;
  r.i = s.i;
  r.zfs_witness = s.zfs_witness;
  r.ii_witness = s.ii_witness;
  r.num_min_zfs = s.num_minimum_zfs;
  r.components = s.components;
  r.closures = s.closures;
  if (s.components > 1) {
    r.warnings.push_back("graph has " + std::to_string(s.components) +
                         " components; Z is summed and I is the maximum over components");
  }

  std::optional<int> pc;
  if (g.vertex_count() <= opts.path_cover_limit) pc = path_cover_number(g, opts.path_cover_limit);
  r.bounds = check_bounds(g, r.z, r.i, pc);

  if (spec && spec->family != Family::edge_list) {
    r.expected = expected_invariants(*spec);
    const auto c = compare(*r.expected, r.z, r.i);
    if (c.applicable) r.match = c.match();
  }
  r.total_ms = ms_since(t0);
  return r;
}

nlohmann::json report_to_json(const InvariantReport& r, bool include_timing) {
  nlohmann::json j;
  j["graph"] = {{"family", r.family}, {"params", r.params}, {"n", r.vertices}, {"m", r.edges}};
  j["z"] = r.z;
  j["i"] = r.i;
  j["zfs_witness"] = vertex_set_json(r.zfs_witness);
  j["ii_witness"] = vertex_set_json(r.ii_witness);
  j["num_min_zfs"] = r.num_min_zfs;
  j["components"] = r.components;
  j["closures"] = r.closures;

  const auto& b = r.bounds;
  nlohmann::json bj;
  bj["min_degree"] = b.min_degree;
  bj["path_cover"] = opt_json(b.path_cover);
  bj["has_edge"] = b.has_edge;
  if (b.has_edge) {
    bj["i_lower"] = b.i_lower;
    bj["i_upper"] = b.i_upper;
  }
  bj["satisfied"] = {{"i_lower", b.i_lower_ok},
                     {"i_upper", b.i_upper_ok},
                     {"min_degree", b.degree_ok},
                     {"path_cover", b.path_cover_ok},
                     {"all", b.satisfied()}};
  j["bounds"] = std::move(bj);

  if (r.expected) {
    const auto& e = *r.expected;
    j["expected"] = {{"z", opt_json(e.z)},
                     {"z_upper", opt_json(e.z_upper)},
                     {"z_conjectured", opt_json(e.z_conjectured)},
                     {"i", opt_json(e.i)},
                     {"i_upper", opt_json(e.i_upper)},
                     {"source", e.source}};
  } else {
    j["expected"] = nullptr;
  }
  j["match"] = r.match ? nlohmann::json(*r.match) : nlohmann::json(nullptr);
  j["warnings"] = r.warnings;
  if (include_timing) j["timing_ms"] = {{"search", r.search_ms}, {"total", r.total_ms}};
  return j;
}

std::string report_csv_header() {
  return "family,params,n,m,z,i,zfs_witness,ii_witness,num_min_zfs,expected_z,expected_i,"
         "expected_i_upper,match,timing_ms";
}

std::string report_csv_row(const InvariantReport& r, bool include_timing) {
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  std::string ez;
  std::string ei;
  std::string eu;
  if (r.expected) {
    ez = opt(r.expected->z);
    ei = opt(r.expected->i);
    eu = opt(r.expected->i_upper);
  }
  std::string match = r.match ? (*r.match ? "true" : "false") : "";
  char ms[32] = "";
  if (include_timing) std::snprintf(ms, sizeof ms, "%.3f", r.total_ms);
  return r.family + "," + joined(r.params) + "," + std::to_string(r.vertices) + "," +
         std::to_string(r.edges) + "," + std::to_string(r.z) + "," + std::to_string(r.i) + "," +
         joined(r.zfs_witness.members()) + "," + joined(r.ii_witness.members()) + "," +
         std::to_string(r.num_min_zfs) + "," + ez + "," + ei + "," + eu + "," + match + "," + ms;
}

}  // namespace zf
