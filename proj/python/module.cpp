#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zforce/chronology.hpp"
#include "zforce/edge_list.hpp"
#include "zforce/errors.hpp"
#include "zforce/families.hpp"
#include "zforce/forcing.hpp"
#include "zforce/kernel.hpp"
#include "zforce/report.hpp"
#include "zforce/search.hpp"

namespace py = pybind11;
using namespace zf;

namespace {

VertexSet to_set(const Graph& g, const std::vector<int>& ids) {
  VertexSet s(g.vertex_count());
  for (int v : ids) {
    if (v < 0 || v >= g.vertex_count()) throw py::index_error("vertex " + std::to_string(v) + " out of range");
    s.insert(v);
  }
  return s;
}

FamilySpec to_spec(const std::string& family, std::vector<int> params) {
  const auto f = parse_family(family);
  if (!f) throw ParameterError("unknown family: " + family);
  return {*f, std::move(params)};
}

SearchOptions options(int workers, std::optional<unsigned long long> budget) {
  SearchOptions o;
  o.workers = workers;
  if (budget) o.budget = *budget;
  return o;
}

py::list layers_of(const std::vector<VertexSet>& sets) {
  py::list out;
  for (const auto& s : sets) out.append(s.members());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact zero forcing computations";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, const std::vector<Edge>&, std::vector<std::string>>(), py::arg("n"), py::arg("edges"),
           py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("label", &Graph::label)
      .def("labels", [](const Graph& g) {
        std::vector<std::string> out;
        for (int v = 0; v < g.vertex_count(); ++v) out.push_back(g.label(v));
        return out;
      })
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("families", [] {
    std::vector<std::string> out;
    for (Family f : all_families()) out.push_back(family_name(f));
    return out;
  });
  m.def(
      "build_family",
      [](const std::string& family, std::vector<int> params) { return build_family(to_spec(family, params)); },
      py::arg("family"), py::arg("params"));
  m.def(
      "parse_edge_list", [](const std::string& text) { return parse_edge_list(text).graph; }, py::arg("text"));

  m.def(
      "closure", [](const Graph& g, const std::vector<int>& z) { return closure(g, to_set(g, z)).members(); },
      py::arg("graph"), py::arg("initial"));
  m.def(
      "is_zero_forcing_set",
      [](const Graph& g, const std::vector<int>& z) { return is_zero_forcing_set(g, to_set(g, z)); },
      py::arg("graph"), py::arg("initial"));
  m.def(
      "run_forcing",
      [](const Graph& g, const std::vector<int>& z) {
        const auto t = run_forcing(g, to_set(g, z));
        py::dict d;
        d["success"] = t.success;
        d["iterations"] = t.iterations();
        d["layers"] = layers_of(t.layers);
        d["derived"] = layers_of(t.derived);
        d["first_black_step"] = t.first_black_step();
        return d;
      },
      py::arg("graph"), py::arg("initial"));
  m.def(
      "generic_kernel_rounds",
      [](const Graph& g, const std::vector<int>& z) {
        const auto k = generic_kernel_rounds(g, to_set(g, z));
        return py::make_tuple(k.solved, k.rounds);
      },
      py::arg("graph"), py::arg("initial"));
  m.def(
      "llfc",
      [](const Graph& g, const std::vector<int>& z) {
        const auto c = llfc(g, to_set(g, z));
        py::dict d;
        d["min"] = c.min_longest;
        d["max"] = c.max_longest;
        d["lists"] = c.lists;
        return d;
      },
      py::arg("graph"), py::arg("initial"));

  m.def(
      "zero_forcing_number",
      [](const Graph& g, int workers, std::optional<unsigned long long> budget) {
        ZeroForcingResult r;
        {
          py::gil_scoped_release release;
          r = zero_forcing_number(g, options(workers, budget));
        }
        return py::make_tuple(r.z, r.witness.members());
      },
      py::arg("graph"), py::arg("workers") = 1, py::arg("budget") = py::none());
  m.def(
      "iteration_index",
      [](const Graph& g, int workers, std::optional<unsigned long long> budget) {
        IterationIndexResult r;
        {
          py::gil_scoped_release release;
          r = iteration_index(g, options(workers, budget));
        }
        return py::make_tuple(r.i, r.witness.members());
      },
      py::arg("graph"), py::arg("workers") = 1, py::arg("budget") = py::none());
  m.def(
      "solve",
      [](const Graph& g, int workers, std::optional<unsigned long long> budget) {
        SolveResult r;
        {
          py::gil_scoped_release release;
          r = solve(g, options(workers, budget));
        }
        py::dict d;
        d["z"] = r.z;
        d["i"] = r.i;
        d["zfs_witness"] = r.zfs_witness.members();
        d["ii_witness"] = r.ii_witness.members();
        d["num_min_zfs"] = r.num_minimum_zfs;
        d["components"] = r.components;
        d["closures"] = r.closures;
        return d;
      },
      py::arg("graph"), py::arg("workers") = 1, py::arg("budget") = py::none());
  m.def(
      "_report_json",
      [](const Graph& g, std::optional<std::string> family, std::optional<std::vector<int>> params, int workers,
         std::optional<unsigned long long> budget) {
        std::optional<FamilySpec> spec;
        if (family) spec = to_spec(*family, params.value_or(std::vector<int>{}));
        ReportOptions o;
        o.search = options(workers, budget);
        return report_to_json(compute_report(g, spec, o), false).dump();
      },
      py::arg("graph"), py::arg("family"), py::arg("params"), py::arg("workers"), py::arg("budget"));
}
