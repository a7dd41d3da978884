#include "zforce/render.hpp"

#include <algorithm>
#include <sstream>

namespace zf {
std::string labeled(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int v) {
    if (!first) out += ", ";
    out += g.label(v);
    first = false;
  });
  return out + "}";
}

namespace {

std::string cell(int step) { return step < 0 ? "." : std::to_string(step); }

}  // namespace

std::optional<GridShape> grid_shape(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::grid:
    case Family::triangular_grid:
    case Family::king_grid:
    case Family::cycle_x_path:
    case Family::complete_x_path:
    case Family::complete_x_complete:
    case Family::cycle_x_complete:
    case Family::cycle_x_cycle:
      if (spec.params.size() == 2) return GridShape{spec.params[0], spec.params[1]};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::string render_trace_text(const Graph& g, const ForcingTrace& trace,
                              std::optional<GridShape> shape) {
  std::ostringstream out;
  const auto steps = trace.first_black_step();
  out << "success: " << (trace.success ? "yes" : "no") << "\n";
  out << "iterations: " << trace.iterations() << "\n";
  out << "Z_0 = " << labeled(g, trace.initial()) << "\n";
  for (std::size_t i = 0; i < trace.derived.size(); ++i) {
    out << "D^" << i + 1 << " = " << labeled(g, trace.derived[i]) << "\n";
  }
  if (!trace.success) out << "white: " << labeled(g, trace.white_remainder()) << "\n";

  out << "first black step:\n";
  if (shape && shape->rows * shape->cols == g.vertex_count()) {
    std::size_t width = 1;
    for (int s : steps) width = std::max(width, cell(s).size());
    for (int r = 0; r < shape->rows; ++r) {
      for (int c = 0; c < shape->cols; ++c) {
        std::string x = cell(steps[static_cast<std::size_t>(r * shape->cols + c)]);
        out << (c ? " " : "  ") << std::string(width - x.size(), ' ') << x;
      }
      out << "\n";
    }
  } else {
    for (int v = 0; v < g.vertex_count(); ++v) {
      out << "  " << g.label(v) << ": " << cell(steps[static_cast<std::size_t>(v)]) << "\n";
    }
  }
  return out.str();
}

std::string render_forces(const Graph& g, const ChronologicalList& list) {
  std::string out;
  for (const Force& f : list.forces) {
    out += g.label(f.source) + " -> " + g.label(f.target) + "\n";
  }
  return out;
}

nlohmann::json vertex_set_json(const VertexSet& s) { return s.members(); }

nlohmann::json trace_to_json(const Graph& g, const ForcingTrace& trace) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  j["initial"] = vertex_set_json(trace.initial());
  auto layers = nlohmann::json::array();
  for (const auto& l : trace.layers) layers.push_back(vertex_set_json(l));
  j["layers"] = std::move(layers);
  auto derived = nlohmann::json::array();
  for (const auto& d : trace.derived) derived.push_back(vertex_set_json(d));
  j["derived"] = std::move(derived);
  j["success"] = trace.success;
  j["iterations"] = trace.iterations();
  j["first_black_step"] = trace.first_black_step();
  j["white_remainder"] = vertex_set_json(trace.white_remainder());
  if (g.has_labels()) j["labels"] = g.labels();
  return j;
}

}  // namespace zf
