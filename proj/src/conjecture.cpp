#include "zforce/conjecture.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "zforce/errors.hpp"
#include "zforce/families.hpp"

namespace zf {

int conjectured_cycle_product_z(int s, int t) {
  if (s > t) std::swap(s, t);
  return (s == t && s % 2 == 1) ? 2 * s - 1 : 2 * s;
}

std::string status_name(ConjectureCell::Status s) {
  switch (s) {
    case ConjectureCell::Status::confirmed:
      return "confirmed";
    case ConjectureCell::Status::refuted:
      return "refuted";
    case ConjectureCell::Status::skipped:
      return "skipped";
  }
  return "unknown";
}

std::vector<ConjectureCell> conjecture_sweep(int s_lo, int s_hi, int t_lo, int t_hi,
                                             const SearchOptions& opts) {
  std::vector<ConjectureCell> out;
  for (int s = std::max(s_lo, 3); s <= s_hi; ++s) {
    for (int t = std::max({t_lo, s, 3}); t <= t_hi; ++t) {
      ConjectureCell c;
      c.s = s;
      c.t = t;
      c.vertices = s * t;
      c.conjectured_z = conjectured_cycle_product_z(s, t);
      const auto start = std::chrono::steady_clock::now();
      try {
        const auto r = solve(build_family({Family::cycle_x_cycle, {s, t}}), opts);
        c.z = r.z;
        c.i = r.i;
        c.closures = r.closures;
        c.status = r.z == c.conjectured_z ? ConjectureCell::Status::confirmed
                                          : ConjectureCell::Status::refuted;
        c.within_upper_bound = r.z <= c.conjectured_z;
      } catch (const BudgetExceeded& e) {
        c.status = ConjectureCell::Status::skipped;
        c.z_lower = e.lower_bound();
      }
      c.elapsed_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      out.push_back(c);
    }
  }
  return out;
}

nlohmann::json conjecture_to_json(const ConjectureCell& c, bool include_timing) {
  nlohmann::json j;
  j["s"] = c.s;
  j["t"] = c.t;
  j["n"] = c.vertices;
  j["z"] = c.z ? nlohmann::json(*c.z) : nlohmann::json(nullptr);
  j["i"] = c.i ? nlohmann::json(*c.i) : nlohmann::json(nullptr);
  j["conjectured_z"] = c.conjectured_z;
  j["upper_bound"] = c.conjectured_z;
  j["within_upper_bound"] = c.within_upper_bound;
  j["status"] = status_name(c.status);
  if (c.z_lower) j["z_lower"] = *c.z_lower;
  j["closures"] = c.closures;
  if (include_timing) j["timing_ms"] = c.elapsed_ms;
  return j;
}

std::string conjecture_csv_header() {
  return "s,t,n,z,i,conjectured_z,upper_bound,status,closures,timing_ms";
}

std::string conjecture_csv_row(const ConjectureCell& c, bool include_timing) {
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  char ms[32] = "";
  if (include_timing) std::snprintf(ms, sizeof ms, "%.3f", c.elapsed_ms);
  return std::to_string(c.s) + "," + std::to_string(c.t) + "," + std::to_string(c.vertices) + "," +
         opt(c.z) + "," + opt(c.i) + "," + std::to_string(c.conjectured_z) + "," +
         std::to_string(c.conjectured_z) + "," + status_name(c.status) + "," +
         std::to_string(c.closures) + "," + ms;
}

}  // namespace zf
