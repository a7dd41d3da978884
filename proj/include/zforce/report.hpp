#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "zforce/bounds.hpp"
#include "zforce/expected.hpp"
#include "zforce/families.hpp"
#include "zforce/path_cover.hpp"
#include "zforce/search.hpp"

namespace zf {

struct ReportOptions {
  SearchOptions search;
  /// Path cover number is computed only up to this many vertices.
  int path_cover_limit = kDefaultPathCoverLimit;
};

struct InvariantReport {
  std::string family = "edge_list";
  std::vector<int> params;
  int vertices = 0;
  int edges = 0;
  int z = 0;
  int i = 0;
  VertexSet zfs_witness;
  VertexSet ii_witness;
  unsigned long long num_min_zfs = 0;
  int components = 1;
  BoundsReport bounds;
  std::optional<ExpectedInvariants> expected;
  std::optional<bool> match;  // nullopt when there is nothing to compare against
  unsigned long long closures = 0;
  double search_ms = 0.0;
  double total_ms = 0.0;
  std::vector<std::string> warnings;
};

/// Z, I, witnesses, bounds and (for a family member) the closed-form
/// comparison. Throws BudgetExceeded, and std::logic_error if a structural
/// bound fails.
InvariantReport compute_report(const Graph& g, const std::optional<FamilySpec>& spec,
                               const ReportOptions& opts = {});

/// Keys: graph{family,params,n,m}, z, i, zfs_witness, ii_witness,
/// num_min_zfs, components, closures, bounds{...}, expected{...}, match,
/// warnings, and timing_ms{search,total} when include_timing is set.
nlohmann::json report_to_json(const InvariantReport& r, bool include_timing = true);

/// Fixed columns: family,params,n,m,z,i,zfs_witness,ii_witness,num_min_zfs,
/// expected_z,expected_i,expected_i_upper,match,timing_ms. List-valued
/// fields are space separated.
std::string report_csv_header();
std::string report_csv_row(const InvariantReport& r, bool include_timing = true);

}  // namespace zf
