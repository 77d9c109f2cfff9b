#include "qaoadepth/problem.hpp"

#include "qaoadepth/error.hpp"

#include <algorithm>
#include <set>

namespace qaoadepth {

namespace {

std::string vertex_name(std::size_t v) { return "x" + std::to_string(v); }

Polynomial var(const VarId& v) { return Polynomial::variable(v); }

void apply_lambda(Problem& problem, const std::optional<Rational>& lambda) {
  if (lambda && *lambda <= 0) {
    throw Error(ErrorKind::invalid_input, "penalty weight must be positive, got " + lambda->str());
  }
  set_penalty_weight(problem, lambda ? *lambda : default_penalty_weight(problem.objective));
}

Problem graph_problem(const InstanceGraph& g, Family family) {
  g.validate();
  Problem p;
  for (std::size_t v = 1; v <= g.n; ++v) p.add_variable(vertex_name(v));
  p.info.family = family;
  p.info.graph = g;
  return p;
}

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::none: return "none";
    case Family::maxcut: return "maxcut";
    case Family::maxindset: return "maxindset";
    case Family::vertex_cover: return "vertex-cover";
    case Family::knapsack: return "knapsack";
    case Family::tsp: return "tsp";
    case Family::sat: return "sat";
  }
  return "none";
}

std::optional<Family> parse_family(std::string_view name) {
  for (auto f : {Family::none, Family::maxcut, Family::maxindset, Family::vertex_cover, Family::knapsack,
                 Family::tsp, Family::sat}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

void InstanceGraph::validate() const {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      throw Error(ErrorKind::invalid_input, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                                "} has an endpoint outside 1.." + std::to_string(n));
    }
    if (e.u == e.v) {
      throw Error(ErrorKind::invalid_input, "self-loop at vertex " + std::to_string(e.u));
    }
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw Error(ErrorKind::invalid_input,
                  "duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
  }
}

std::vector<std::size_t> InstanceGraph::degrees() const {
  std::vector<std::size_t> deg(n + 1, 0);
  for (const auto& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::size_t InstanceGraph::max_degree() const {
  auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

InstanceGraph wheel_graph(std::size_t n) {
  // Hub 1, rim 2..n in cyclic order.
  InstanceGraph g{n, {}};
  for (std::size_t v = 2; v <= n; ++v) g.edges.push_back({1, v});
  for (std::size_t v = 2; v <= n; ++v) g.edges.push_back({v, v == n ? 2 : v + 1});
  return g;
}

InstanceGraph star_graph(std::size_t leaves) {
  InstanceGraph g{leaves + 1, {}};
  for (std::size_t v = 2; v <= leaves + 1; ++v) g.edges.push_back({1, v});
  return g;
}

InstanceGraph complete_graph(std::size_t n) {
  InstanceGraph g{n, {}};
  for (std::size_t u = 1; u <= n; ++u)
    for (std::size_t v = u + 1; v <= n; ++v) g.edges.push_back({u, v});
  return g;
}

InstanceGraph cycle_graph(std::size_t n) {
  InstanceGraph g{n, {}};
  for (std::size_t v = 1; v <= n; ++v) g.edges.push_back({v, v == n ? 1 : v + 1});
  return g;
}

InstanceGraph path_graph(std::size_t n) {
  InstanceGraph g{n, {}};
  for (std::size_t v = 1; v < n; ++v) g.edges.push_back({v, v + 1});
  return g;
}

const VarId& Problem::add_variable(const std::string& name) {
  if (name.empty()) throw Error(ErrorKind::invalid_input, "variable names must be non-empty");
  if (find_variable(name)) throw Error(ErrorKind::invalid_input, "duplicate variable '" + name + "'");
  variables.push_back(VarId::original(name));
  return variables.back();
}

const VarId* Problem::find_variable(const std::string& name) const {
  for (const auto& v : variables) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

void Problem::validate() const {
  std::set<std::string> names;
  for (const auto& v : variables) {
    if (v.is_slack()) {
      throw Error(ErrorKind::invalid_input, "slack variable '" + v.name + "' present before dualization");
    }
    if (!names.insert(v.name).second) throw Error(ErrorKind::invalid_input, "duplicate variable '" + v.name + "'");
  }
  auto check = [&](const Polynomial& poly, const std::string& where) {
    for (const auto& v : poly.variables()) {
      if (v.is_slack() || !names.count(v.name)) {
        throw Error(ErrorKind::invalid_input, where + " references unregistered variable '" + v.name + "'");
      }
    }
  };
  check(objective, "objective");
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const auto& c = constraints[i];
    const std::string where = "constraint " + std::to_string(i + 1);
    check(c.lhs, where);
    if (c.penalty_weight <= 0) throw Error(ErrorKind::invalid_input, where + " has a non-positive penalty weight");
    if (c.lower && *c.lower > c.rhs) throw Error(ErrorKind::invalid_input, where + " has lower bound above rhs");
  }
}

Polynomial Problem::normalized_objective() const { return sense == Sense::maximize ? -objective : objective; }

bool Problem::is_feasible(const Assignment& assignment) const {
  for (const auto& c : constraints) {
    const Rational value = evaluate(c.lhs, assignment);
    if (value > c.rhs) return false;
    if (c.lower && value < *c.lower) return false;
  }
  return true;
}

Rational default_penalty_weight(const Polynomial& objective) { return Rational(1) + absolute_bound(objective); }

void set_penalty_weight(Problem& problem, const Rational& lambda) {
  for (auto& c : problem.constraints) c.penalty_weight = lambda;
}

Problem make_maxcut(const InstanceGraph& g) {
  Problem p = graph_problem(g, Family::maxcut);
  for (const auto& e : g.edges) {
    const auto& xi = p.variables[e.u - 1];
    const auto& xj = p.variables[e.v - 1];
    p.objective += e.weight * (Rational(2) * (var(xi) * var(xj)) - var(xi) - var(xj));
  }
  return p;
}

Problem make_maxindset(const InstanceGraph& g, std::optional<Rational> lambda) {
  Problem p = graph_problem(g, Family::maxindset);
  p.sense = Sense::maximize;
  for (const auto& v : p.variables) p.objective += var(v);
  for (const auto& e : g.edges) {
    Constraint c;
    c.lhs = var(p.variables[e.u - 1]) * var(p.variables[e.v - 1]);
    c.rhs = 0;
    c.label = "edge " + std::to_string(e.u) + "-" + std::to_string(e.v);
    p.constraints.push_back(std::move(c));
  }
  apply_lambda(p, lambda);
  return p;
}

Problem make_vertex_cover(const InstanceGraph& g, std::optional<Rational> lambda) {
  Problem p = graph_problem(g, Family::vertex_cover);
  for (const auto& v : p.variables) p.objective += var(v);
  for (const auto& e : g.edges) {
    Constraint c;
    c.lhs = (Rational(1) - var(p.variables[e.u - 1])) + (Rational(1) - var(p.variables[e.v - 1]));
    c.rhs = 1;
    c.label = "cover " + std::to_string(e.u) + "-" + std::to_string(e.v);
    p.constraints.push_back(std::move(c));
  }
  apply_lambda(p, lambda);
  return p;
}

Problem make_knapsack(const std::vector<Rational>& values, const std::vector<Rational>& weights,
                      const Rational& capacity, std::optional<Rational> lambda, bool preprocess) {
  if (values.size() != weights.size()) {
    throw Error(ErrorKind::invalid_input, "knapsack needs one value per weight");
  }
  if (capacity <= 0) throw Error(ErrorKind::invalid_input, "knapsack capacity must be positive");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0) {
      throw Error(ErrorKind::invalid_input, "knapsack weight " + std::to_string(i + 1) + " is not positive");
    }
  }

  Problem p;
  p.sense = Sense::maximize;
  p.info.family = Family::knapsack;
  p.info.weights = weights;
  p.info.capacity = capacity;
  Polynomial load;
  Rational total_weight = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const auto& x = p.add_variable(vertex_name(i + 1));
    p.objective += values[i] * var(x);
    load += weights[i] * var(x);
    total_weight += weights[i];
  }

  if (total_weight <= capacity) {
    p.warnings.push_back("capacity " + capacity.str() + " admits every item; capacity constraint dropped");
  } else {
    Constraint c;
    c.lhs = std::move(load);
    c.rhs = capacity;
    c.label = "capacity";
    if (preprocess) {
      // An optimal load leaves less room than the heaviest item, otherwise
      // that item would still fit.
      const Rational heaviest = *std::max_element(weights.begin(), weights.end());
      if (capacity - heaviest > 0) c.lower = capacity - heaviest;
      p.info.preprocessed = true;
    }
    p.constraints.push_back(std::move(c));
  }
  apply_lambda(p, lambda);
  return p;
}

Problem make_tsp(const InstanceGraph& g, const std::vector<std::vector<std::size_t>>& subtour_subsets,
                 std::optional<Rational> lambda) {
  g.validate();
  if (g.n < 3) throw Error(ErrorKind::invalid_input, "a tour needs at least 3 vertices");
  Problem p;
  p.info.family = Family::tsp;
  p.info.graph = g;

  std::vector<VarId> edge_vars;
  for (const auto& e : g.edges) {
    const auto [a, b] = std::minmax(e.u, e.v);
    edge_vars.push_back(p.add_variable("x" + std::to_string(a) + "_" + std::to_string(b)));
    p.objective += e.weight * var(edge_vars.back());
  }

  for (std::size_t v = 1; v <= g.n; ++v) {
    Polynomial incident;
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
      if (g.edges[k].u == v || g.edges[k].v == v) incident += var(edge_vars[k]);
    }
    p.constraints.push_back(Constraint{incident, Rational(2), 1, std::nullopt, "degree " + std::to_string(v) + " <= 2"});
    p.constraints.push_back(
        Constraint{-incident, Rational(-2), 1, std::nullopt, "degree " + std::to_string(v) + " >= 2"});
  }

  for (const auto& subset : subtour_subsets) {
    std::set<std::size_t> q(subset.begin(), subset.end());
    if (q.size() != subset.size()) throw Error(ErrorKind::invalid_input, "subtour subset repeats a vertex");
    if (q.size() < 2 || q.size() >= g.n) {
      throw Error(ErrorKind::invalid_input, "subtour subsets need 2 <= |Q| < n, got |Q| = " + std::to_string(q.size()));
    }
    for (auto v : q) {
      if (v < 1 || v > g.n) throw Error(ErrorKind::invalid_input, "subtour vertex " + std::to_string(v) + " out of range");
    }
    std::string label = "subtour {";
    for (auto v : q) label += (label.back() == '{' ? "" : ",") + std::to_string(v);
    label += "}";
    if (q.size() == 2) {
      p.warnings.push_back(label + " reduces to x_e <= 1, which binary variables satisfy; dropped");
      continue;
    }
    Polynomial inside;
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
      if (q.count(g.edges[k].u) && q.count(g.edges[k].v)) inside += var(edge_vars[k]);
    }
    p.constraints.push_back(
        Constraint{inside, Rational(static_cast<long long>(q.size()) - 1), 1, std::nullopt, label});
    ++p.info.subtour_constraints;
  }
  apply_lambda(p, lambda);
  return p;
}

Problem make_sat(const std::vector<Clause>& clauses, std::optional<Rational> lambda) {
  Problem p;
  p.info.family = Family::sat;
  p.info.clauses = clauses;

  std::set<int> atoms;
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    if (clauses[c].empty()) throw Error(ErrorKind::invalid_input, "clause " + std::to_string(c + 1) + " is empty");
    for (int lit : clauses[c]) {
      if (lit == 0) throw Error(ErrorKind::invalid_input, "literal 0 in clause " + std::to_string(c + 1));
      atoms.insert(lit < 0 ? -lit : lit);
    }
  }
  for (int a : atoms) p.add_variable(vertex_name(static_cast<std::size_t>(a)));

  for (std::size_t c = 0; c < clauses.size(); ++c) {
    const auto& z = p.add_variable("z" + std::to_string(c + 1));
    p.objective += var(z);
  }
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    // Contrapositive: the number of false literals is at most |c| - 1 + z_c.
    Polynomial falsified;
    for (int lit : clauses[c]) {
      const auto& x = *p.find_variable(vertex_name(static_cast<std::size_t>(lit < 0 ? -lit : lit)));
      falsified += lit > 0 ? Polynomial(Rational(1)) - var(x) : var(x);
    }
    const auto& z = *p.find_variable("z" + std::to_string(c + 1));
    Constraint con;
    con.lhs = falsified - var(z);
    con.rhs = Rational(static_cast<long long>(clauses[c].size()) - 1);
    con.label = "clause " + std::to_string(c + 1);
    p.constraints.push_back(std::move(con));
  }
  apply_lambda(p, lambda);
  return p;
}

}  // namespace qaoadepth
