#include "qaoadepth/scheduler.hpp"

#include "qaoadepth/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qaoadepth {

std::string to_string(LayerKind kind) {
  switch (kind) {
    case LayerKind::cost: return "cost";
    case LayerKind::singleton: return "singleton";
    case LayerKind::mixer: return "mixer";
  }
  return "cost";
}

std::string to_string(SingletonPlacement placement) {
  switch (placement) {
    case SingletonPlacement::pack_idle: return "pack";
    case SingletonPlacement::separate_layer: return "separate";
    case SingletonPlacement::absorb_into_gates: return "absorb";
  }
  return "pack";
}

std::optional<SingletonPlacement> parse_singleton_placement(std::string_view name) {
  for (auto p : {SingletonPlacement::pack_idle, SingletonPlacement::separate_layer,
                 SingletonPlacement::absorb_into_gates}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

namespace {

std::string angle(char symbol, std::size_t iteration) {
  return std::string(symbol == 'g' ? "gamma_" : "beta_") + std::to_string(iteration);
}

}  // namespace

std::vector<Layer> CircuitSchedule::unrolled() const {
  std::vector<Layer> out;
  out.reserve(layers.size() * iterations);
  for (std::size_t k = 1; k <= iterations; ++k) {
    for (Layer layer : layers) {
      for (auto& g : layer.gates) g.angle = angle(layer.kind == LayerKind::mixer ? 'b' : 'g', k);
      out.push_back(std::move(layer));
    }
  }
  return out;
}

CircuitSchedule schedule(const DerivedHypergraph& h, const EdgeColoring& coloring, std::size_t iterations,
                         const ScheduleOptions& options) {
  if (iterations == 0) throw Error(ErrorKind::invalid_input, "a schedule needs at least one iteration");
  if (const auto check = check_coloring(h, coloring); !check.ok) {
    throw Error(ErrorKind::invalid_input, "improper coloring: " + check.message);
  }

  CircuitSchedule s;
  s.qubits = h.vertices;
  s.iterations = iterations;
  s.global_phase = h.constant;
  s.color_classes = coloring.size();

  std::vector<std::size_t> order(coloring.classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return coloring.classes[a].size() > coloring.classes[b].size(); });

  std::vector<std::set<VarId>> busy;
  for (auto c : order) {
    Layer layer{LayerKind::cost, {}};
    std::set<VarId> used;
    for (auto e : coloring.classes[c]) {
      layer.gates.push_back(Gate{h.edges[e].support, h.edges[e].terms, angle('g', 1)});
      used.insert(h.edges[e].support.begin(), h.edges[e].support.end());
    }
    std::sort(layer.gates.begin(), layer.gates.end(),
              [](const Gate& a, const Gate& b) { return a.support < b.support; });
    s.layers.push_back(std::move(layer));
    busy.push_back(std::move(used));
  }

  Layer singleton_layer{LayerKind::singleton, {}};
  for (const auto& [support, c] : h.singletons.terms()) {
    const VarId& v = support.front();
    Gate gate{support, Polynomial::term(support, c), angle('g', 1)};
    if (options.placement != SingletonPlacement::separate_layer) {
      auto idle = std::find_if(busy.begin(), busy.end(), [&](const auto& used) { return !used.count(v); });
      if (idle != busy.end()) {
        const auto layer = static_cast<std::size_t>(idle - busy.begin());
        idle->insert(v);
        s.layers[layer].gates.push_back(std::move(gate));
        s.singleton_layer_plan[v] = layer;
        continue;
      }
      if (options.placement == SingletonPlacement::absorb_into_gates) {
        bool folded = false;
        for (std::size_t layer = 0; layer < s.layers.size() && !folded; ++layer) {
          for (auto& g : s.layers[layer].gates) {
            if (std::binary_search(g.support.begin(), g.support.end(), v)) {
              g.terms += gate.terms;
              s.singleton_layer_plan[v] = layer;
              folded = true;
              break;
            }
          }
        }
        if (folded) continue;
      }
    }
    singleton_layer.gates.push_back(std::move(gate));
  }
  for (auto& layer : s.layers) {
    std::stable_sort(layer.gates.begin(), layer.gates.end(),
                     [](const Gate& a, const Gate& b) { return a.support < b.support; });
  }
  if (!singleton_layer.gates.empty()) {
    const std::size_t index = s.layers.size();
    for (const auto& g : singleton_layer.gates) s.singleton_layer_plan[g.support.front()] = index;
    s.layers.push_back(std::move(singleton_layer));
    s.has_singleton_layer = true;
  }

  Layer mixer{LayerKind::mixer, {}};
  for (const auto& v : h.vertices) mixer.gates.push_back(Gate{Support{v}, Polynomial(), angle('b', 1)});
  s.layers.push_back(std::move(mixer));
  return s;
}

bool DepthReport::discrepancy() const {
  return std::any_of(checks.begin(), checks.end(), [](const auto& c) { return c.matches && !*c.matches; });
}

DepthReport depth_report(const CircuitSchedule& s, const EdgeColoring& coloring) {
  DepthReport r;
  r.structural_depth = s.depth_per_iteration();
  r.coloring_depth = s.color_classes;
  r.singleton_overhead = s.has_singleton_layer ? 1 : 0;
  r.coloring_optimal = coloring.optimal;
  return r;
}

namespace {

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

FormulaCheck make_check(std::string name, std::string formula, std::string quantity,
                        std::vector<std::int64_t> values, std::int64_t computed, std::string note = {}) {
  FormulaCheck c{std::move(name), std::move(formula), std::move(quantity), std::move(values), computed, std::nullopt,
                 std::move(note)};
  if (!c.formula_values.empty()) {
    c.matches = std::find(c.formula_values.begin(), c.formula_values.end(), computed) != c.formula_values.end();
  }
  return c;
}

bool is_star(const InstanceGraph& g) {
  if (g.n < 2 || g.edges.size() != g.n - 1) return false;
  const auto deg = g.degrees();
  return std::any_of(deg.begin() + 1, deg.end(), [&](auto d) { return d == g.n - 1; });
}

std::string optimality_note(const DepthReport& r) {
  return r.coloring_optimal ? std::string{} : "coloring not proven optimal; chi' taken from the heuristic coloring";
}

}  // namespace

DepthReport analyze_family(const Problem& problem, const Pubo& pubo, const DerivedHypergraph& h,
                           const EdgeColoring& coloring, const CircuitSchedule& s) {
  DepthReport r = depth_report(s, coloring);
  r.family = to_string(problem.info.family);
  const auto structural = as_int(r.structural_depth);
  const auto chi = as_int(r.coloring_depth);

  switch (problem.info.family) {
    case Family::maxcut:
    case Family::maxindset: {
      const InstanceGraph& g = *problem.info.graph;
      const auto delta = as_int(g.max_degree());
      if (!g.edges.empty()) {
        r.checks.push_back(make_check("Vizing", "chi'(G) in {Delta, Delta + 1}", "color classes", {delta, delta + 1},
                                      chi, optimality_note(r)));
      }
      r.checks.push_back(make_check("two-local circuit depth", "chi'(G) + 1 or chi'(G) + 2", "structural depth",
                                    {chi + 1, chi + 2}, structural));
      if (is_star(g)) {
        r.checks.push_back(make_check("star graph depth", "n", "structural depth", {as_int(g.n)}, structural,
                                      "counts one layer per edge plus the mixer"));
      }
      break;
    }
    case Family::vertex_cover: {
      r.checks.push_back(make_check("vertex cover depth", "2chi(G) + 1", "structural depth", {}, structural,
                                    "the formula's chi is not evaluated: its notation does not say whether the "
                                    "vertex or edge chromatic number is meant"));
      break;
    }
    case Family::knapsack: {
      const std::size_t n = problem.info.weights.size();
      const std::size_t slack = pubo.slack_variables().size();
      r.checks.push_back(make_check(
          "knapsack depth", problem.info.preprocessed ? "n + ln(w_n)" : "n + ln(W)", "n + slack bits", {},
          as_int(n + slack),
          "slack bits counted as ceil(log2(range + 1)) = " + std::to_string(slack) +
              "; the derived graph is complete on these vertices, so chi' is n + slack - 1 or n + slack"));
      break;
    }
    case Family::tsp: {
      const std::size_t n = problem.info.graph->n;
      std::size_t active = 0;
      for (const auto& c : pubo.provenance)
        if (!c.dropped) ++active;
      std::size_t max_neighbors = 0;
      for (const auto& v : h.vertices) max_neighbors = std::max(max_neighbors, h.neighbor_count(v));
      r.checks.push_back(make_check("TSP depth", "n - 1 + 2N_c", "max degree of derived graph",
                                    {as_int(n - 1 + 2 * active)}, as_int(max_neighbors),
                                    "N_c = " + std::to_string(active) + " dualized constraints"));
      break;
    }
    case Family::sat: {
      std::set<int> atoms;
      for (const auto& c : problem.info.clauses)
        for (int lit : c) atoms.insert(lit < 0 ? -lit : lit);
      for (int a : atoms) {
        std::set<int> together;
        std::size_t containing = 0;
        for (const auto& c : problem.info.clauses) {
          const bool has = std::any_of(c.begin(), c.end(), [&](int lit) { return lit == a || lit == -a; });
          if (!has) continue;
          ++containing;
          for (int lit : c) together.insert(lit < 0 ? -lit : lit);
        }
        const std::string name = "x" + std::to_string(a);
        const VarId* v = problem.find_variable(name);
        const auto computed = v ? as_int(h.neighbor_count(*v)) : 0;
        r.checks.push_back(make_check("SAT degree of " + name, "|U C_x| - 1 + 2|C_x|", "derived-graph degree",
                                      {as_int(together.size()) - 1 + 2 * as_int(containing)}, computed,
                                      "clause indicator z_c is also adjacent to every variable of its clause"));
      }
      break;
    }
    case Family::none:
      break;
  }
  return r;
}

std::size_t total_depth(const DepthReport& report, std::size_t iterations) {
  if (iterations == 0) throw Error(ErrorKind::invalid_input, "iterations must be at least 1");
  return iterations * report.structural_depth;
}

}  // namespace qaoadepth
