#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "zforce/search.hpp"

namespace zf {

/// Conjectured Z(C_s □ C_t) for 3 <= s <= t: 2s-1 when s = t is odd, else 2s.
/// The same numbers are proven upper bounds.
int conjectured_cycle_product_z(int s, int t);

struct ConjectureCell {
  enum class Status { confirmed, refuted, skipped };

  int s = 0;
  int t = 0;
  int vertices = 0;
  Status status = Status::skipped;
  std::optional<int> z;
  std::optional<int> i;
  std::optional<int> z_lower;  // set when skipped: Z >= z_lower was established
  int conjectured_z = 0;
  bool within_upper_bound = true;
  unsigned long long closures = 0;
  double elapsed_ms = 0.0;
};

std::string status_name(ConjectureCell::Status s);

/// Exact Z and I of C_s □ C_t for every s <= t with s in [s_lo, s_hi] and
/// t in [t_lo, t_hi]. Cells the budget refuses are reported as skipped.
std::vector<ConjectureCell> conjecture_sweep(int s_lo, int s_hi, int t_lo, int t_hi,
                                             const SearchOptions& opts = {});

nlohmann::json conjecture_to_json(const ConjectureCell& c, bool include_timing = true);
std::string conjecture_csv_header();
/// The timing_ms column is left empty unless include_timing is set.
std::string conjecture_csv_row(const ConjectureCell& c, bool include_timing = true);

}  // namespace zf
