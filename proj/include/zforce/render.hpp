#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "zforce/chronology.hpp"
#include "zforce/families.hpp"
#include "zforce/forcing.hpp"

namespace zf {

struct GridShape {
  int rows = 0;
  int cols = 0;
};

/// Row/column layout of product-like families; nullopt otherwise.
std::optional<GridShape> grid_shape(const FamilySpec& spec);

/// "{(1,2), (2,3)}" using vertex labels (decimal ids when unlabeled).
std::string labeled(const Graph& g, const VertexSet& s);

/// Per-vertex annotation with the step m at which each vertex joins Z_m
/// ('.' for vertices that never turn black), then the derived sets.
/// With a grid shape the annotation is laid out as rows x cols.
std::string render_trace_text(const Graph& g, const ForcingTrace& trace,
                              std::optional<GridShape> shape = std::nullopt);

std::string render_forces(const Graph& g, const ChronologicalList& list);

nlohmann::json vertex_set_json(const VertexSet& s);
nlohmann::json trace_to_json(const Graph& g, const ForcingTrace& trace);

}  // namespace zf
