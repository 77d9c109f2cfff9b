#include "qaoadepth/error.hpp"
#include "qaoadepth/pipeline.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace qaoadepth;

namespace {

std::optional<Rational> lambda_from(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return parse_rational(*text);
}

InstanceGraph graph_of(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  InstanceGraph g;
  g.n = n;
  for (const auto& [u, v] : edges) g.edges.push_back({u, v, 1});
  g.validate();
  return g;
}

std::string dump(const Json& j) { return j.dump(); }

PipelineConfig make_config(std::optional<std::size_t> gate_width, std::size_t iterations, bool merge,
                           std::size_t exact_limit, const std::string& placement, std::size_t budget) {
  PipelineConfig c;
  c.gate_width = gate_width;
  c.iterations = iterations;
  c.merge = merge;
  c.exact_limit = exact_limit;
  c.budget = budget;
  auto p = parse_singleton_placement(placement);
  if (!p) throw Error(ErrorKind::invalid_input, "unknown singleton placement '" + placement + "'");
  c.placement = *p;
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of qaoadepth; every structured value crosses as a JSON string.";

  static py::exception<Error> error(m, "QaoaDepthError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetObject(error.ptr(), py::make_tuple(e.what(), e.exit_code()).ptr());
    }
  });

  m.attr("__version__") = kToolVersion;

  m.def("maxcut_problem", [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    return dump(problem_to_json(make_maxcut(graph_of(n, edges))));
  });
  m.def(
      "maxindset_problem",
      [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
         std::optional<std::string> lambda) {
        return dump(problem_to_json(make_maxindset(graph_of(n, edges), lambda_from(lambda))));
      },
      py::arg("n"), py::arg("edges"), py::arg("penalty") = py::none());
  m.def(
      "vertex_cover_problem",
      [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
         std::optional<std::string> lambda) {
        return dump(problem_to_json(make_vertex_cover(graph_of(n, edges), lambda_from(lambda))));
      },
      py::arg("n"), py::arg("edges"), py::arg("penalty") = py::none());
  m.def(
      "knapsack_problem",
      [](const std::vector<std::string>& values, const std::vector<std::string>& weights, const std::string& capacity,
         bool preprocess) {
        std::vector<Rational> v;
        std::vector<Rational> w;
        for (const auto& x : values) v.push_back(parse_rational(x));
        for (const auto& x : weights) w.push_back(parse_rational(x));
        return dump(problem_to_json(make_knapsack(v, w, parse_rational(capacity), std::nullopt, preprocess)));
      },
      py::arg("values"), py::arg("weights"), py::arg("capacity"), py::arg("preprocess") = false);
  m.def("sat_problem", [](const std::vector<std::vector<int>>& clauses) {
    return dump(problem_to_json(make_sat(clauses)));
  });
  m.def("read_dimacs_graph", [](const std::string& text) {
    std::istringstream in(text);
    const InstanceGraph g = parse_dimacs_graph(in);
    Json edges = Json::array();
    for (const auto& e : g.edges) edges.push_back(Json::array({e.u, e.v}));
    return dump(Json{{"n", g.n}, {"edges", edges}});
  });

  m.def(
      "dualize",
      [](const std::string& problem, std::optional<std::string> lambda) {
        Problem p = problem_from_json(Json::parse(problem));
        if (auto l = lambda_from(lambda)) set_penalty_weight(p, *l);
        return dump(to_json(dualize(p)));
      },
      py::arg("problem"), py::arg("penalty") = py::none());
  m.def(
      "analyze",
      [](const std::string& problem, std::optional<std::size_t> gate_width, std::size_t iterations, bool merge,
         std::size_t exact_limit, const std::string& placement, std::size_t budget) {
        const PipelineConfig c = make_config(gate_width, iterations, merge, exact_limit, placement, budget);
        const auto r = run_pipeline(problem_from_json(Json::parse(problem)), c);
        return dump(run_artifact(r, c, Json(nullptr)));
      },
      py::arg("problem"), py::arg("gate_width") = py::none(), py::arg("iterations") = 1, py::arg("merge") = false,
      py::arg("exact_limit") = 20, py::arg("singletons") = "pack", py::arg("budget") = kDefaultSearchBudget);
  m.def(
      "verify",
      [](const std::string& problem, std::size_t var_limit) {
        const Problem p = problem_from_json(Json::parse(problem));
        const Pubo pubo = dualize(p);
        return dump(to_json(verify_penalty(pubo, p, var_limit), pubo));
      },
      py::arg("problem"), py::arg("var_limit") = kDefaultVerifyLimit);
  m.def(
      "color",
      [](const std::vector<std::vector<std::string>>& supports, const std::string& method, std::size_t budget) {
        const DerivedHypergraph h = hypergraph_from_supports(supports);
        EdgeColoring c;
        if (method == "exact") {
          auto exact = color_exact(h, budget);
          if (!exact) throw Error(ErrorKind::budget_exceeded, "exact coloring budget exceeded");
          c = std::move(*exact);
        } else if (method == "misra_gries") {
          c = color_misra_gries(h);
        } else if (method == "greedy") {
          c = color_greedy(h);
        } else {
          throw Error(ErrorKind::invalid_input, "unknown method '" + method + "'");
        }
        return dump(to_json(c, h));
      },
      py::arg("supports"), py::arg("method") = "exact", py::arg("budget") = kDefaultSearchBudget);
  m.def(
      "to_dot",
      [](const std::string& problem, std::optional<std::size_t> gate_width) {
        PipelineConfig c;
        c.gate_width = gate_width;
        const auto r = run_pipeline(problem_from_json(Json::parse(problem)), c);
        return to_dot(r.hypergraph, &r.coloring);
      },
      py::arg("problem"), py::arg("gate_width") = py::none());
}
