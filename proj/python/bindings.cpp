#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "mdlab/analysis.hpp"
#include "mdlab/checks.hpp"
#include "mdlab/cli.hpp"
#include "mdlab/coloring.hpp"
#include "mdlab/errors.hpp"
#include "mdlab/extremal.hpp"
#include "mdlab/families.hpp"
#include "mdlab/graph6.hpp"
#include "mdlab/products.hpp"
#include "mdlab/report.hpp"
#include "mdlab/solver.hpp"

namespace py = pybind11;
using namespace mdlab;

namespace {

SearchConfig config(std::uint64_t node_budget, long long time_budget_ms) {
  SearchConfig cfg;
  if (node_budget > 0) cfg.node_budget = node_budget;
  if (time_budget_ms > 0) cfg.time_budget = std::chrono::milliseconds(time_budget_ms);
  return cfg;
}

// Reports cross the boundary as JSON text; the Python package decodes them.
std::string md(const Graph& g, std::uint64_t node_budget, long long time_budget_ms) {
  py::gil_scoped_release release;
  return md_report(g, md_exact(g, config(node_budget, time_budget_ms))).dump();
}

std::string verify_coloring(const Graph& g, const std::vector<Color>& colors) {
  const EdgeColoring c(g, colors);
  return verification_report(g, c, is_md_coloring(g, c)).dump();
}

std::string closure(const Graph& g) { return closure_report(g, theta_classes(g), is_closure(g)).dump(); }

std::string census(char which, int n, int r, int jobs) {
  py::gil_scoped_release release;
  CensusOptions opts;
  opts.jobs = jobs;
  const Census c = Census::enumerate(n, opts);
  Json out = Json::array();
  for (int k = 1; k <= n - 1; ++k) {
    if (r != 0 && k != r) continue;
    out.push_back(threshold_report(which == 'f' ? verify_f(c, k) : verify_g(c, k)));
  }
  return out.dump();
}

std::string check(const std::string& id, int max_order, std::uint64_t seed) {
  py::gil_scoped_release release;
  CheckOptions opts;
  opts.max_order = max_order;
  opts.seed = seed;
  const CheckResult r = run_check(id, opts);
  return Json{{"id", r.id},           {"name", r.name},       {"passed", r.passed()},
              {"cases", r.cases},     {"failures", r.failures}, {"failure_count", r.failure_count},
              {"unknown", r.unknown}, {"notes", r.notes},     {"max_order", r.max_order}}
      .dump();
}

py::tuple run_cli(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Maximum monochromatic-disconnection colorings: exact solver, families, products and threshold sweeps.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             std::vector<Edge> es;
             for (const auto& [u, v] : edges) es.push_back({u, v});
             return Graph(n, std::move(es));
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
      .def("graph6", [](const Graph& g) { return to_graph6(g); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("is_connected", [](const Graph& g) { return is_connected(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) + ")";
      });

  m.def("md", &md, py::arg("graph"), py::arg("node_budget") = 0, py::arg("time_budget_ms") = 0);
  m.def("md_oracle", &md_oracle, py::arg("graph"));
  m.def("verify_coloring", &verify_coloring, py::arg("graph"), py::arg("colors"));
  m.def("closure", &closure, py::arg("graph"));
  m.def("build", [](const std::string& family, const std::vector<int>& params) {
    const auto kind = parse_family(family);
    if (!kind) throw DomainError("unknown family '" + family + "'");
    return build({*kind, params}).graph;
  });
  m.def("family_names", &family_names);
  m.def("product", [](const Graph& g, const Graph& h, const std::string& kind) {
    const auto k = parse_product_kind(kind);
    if (!k) throw DomainError("unknown product kind '" + kind + "'");
    return product(g, h, *k);
  });
  m.def("threshold_f", &threshold_f, py::arg("n"), py::arg("r"));
  m.def("threshold_g", &threshold_g, py::arg("n"), py::arg("r"));
  m.def("enumerate_connected", [](int n) {
    std::vector<std::string> out;
    for (const Graph& g : enumerate_connected(n)) out.push_back(to_graph6(g));
    return out;
  });
  m.def("census", &census, py::arg("which"), py::arg("n"), py::arg("r") = 0, py::arg("jobs") = 1);
  m.def("check", &check, py::arg("id"), py::arg("max_order") = 0, py::arg("seed") = 1);
  m.def("run_cli", &run_cli, py::arg("args"), py::arg("input") = "");
}
