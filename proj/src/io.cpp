#include "qaoadepth/io.hpp"

#include "qaoadepth/error.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <unistd.h>

namespace qaoadepth {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::invalid_input, where + ": " + what);
}

Json big_to_json(const BigInt& v) {
  if (auto small = to_int64(v)) return *small;
  return v.str();
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::size_t index_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected a non-negative integer");
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  const auto v = j.get<std::int64_t>();
  if (v < 0) fail(where, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

Polynomial terms_from_json(const Json& j, const Problem& problem, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list of terms");
  Polynomial p;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string at = where + "[" + std::to_string(t) + "]";
    const Json& vars = field(j[t], "vars", at);
    if (!vars.is_array()) fail(at + ".vars", "expected a list of variable names");
    Support support;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      const std::string vat = at + ".vars[" + std::to_string(k) + "]";
      if (!vars[k].is_string()) fail(vat, "expected a variable name");
      const auto name = vars[k].get<std::string>();
      const VarId* v = problem.find_variable(name);
      if (!v) fail(vat, "undeclared variable '" + name + "'");
      support.push_back(*v);
    }
    p.add_term(std::move(support), rational_from_json(field(j[t], "coeff", at), at + ".coeff"));
  }
  return p;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_input, "cannot open '" + path.string() + "'");
  return in;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

std::size_t parse_count(const std::string& text, const std::string& where) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    if (text.empty() || text.front() == '-') throw std::invalid_argument(text);
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    fail(where, "expected a non-negative integer, got '" + text + "'");
  }
  if (used != text.size()) fail(where, "expected a non-negative integer, got '" + text + "'");
  return static_cast<std::size_t>(v);
}

std::vector<Rational> rationals_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list of numbers");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

Json to_json(const Rational& value) {
  return Json{{"num", big_to_json(boost::multiprecision::numerator(value))},
              {"den", big_to_json(boost::multiprecision::denominator(value))}};
}

Rational rational_from_json(const Json& j, const std::string& where) {
  auto parse = [&](const std::string& text) {
    try {
      return parse_rational(text);
    } catch (const Error& e) {
      fail(where, e.what());
    }
  };
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(BigInt(j.get<std::uint64_t>()));
    return Rational(BigInt(j.get<std::int64_t>()));
  }
  if (j.is_number_float()) return parse(j.dump());
  if (j.is_string()) return parse(j.get<std::string>());
  if (j.is_object()) {
    const Rational num = rational_from_json(field(j, "num", where), where + ".num");
    const Rational den = rational_from_json(field(j, "den", where), where + ".den");
    if (!is_integer(num) || !is_integer(den)) fail(where, "num and den must be integers");
    if (den == 0) fail(where, "zero denominator");
    return num / den;
  }
  fail(where, "expected a number, a string such as \"3/4\" or {\"num\", \"den\"}");
}

Json to_json(const VarId& v) { return v.name; }

Json to_json(const Support& s) {
  Json out = Json::array();
  for (const auto& v : s) out.push_back(v.name);
  return out;
}

Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [support, c] : p.terms()) out.push_back(Json{{"vars", to_json(support)}, {"coeff", to_json(c)}});
  return out;
}

Problem problem_from_json(const Json& j) {
  if (!j.is_object()) fail("problem", "expected a JSON object");
  static const std::set<std::string> known{"sense", "variables", "objective", "constraints"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) fail("problem", "unknown field '" + key + "'");
  }
  Problem p;
  if (auto it = j.find("sense"); it != j.end()) {
    if (*it == "minimize" || *it == "min") {
      p.sense = Sense::minimize;
    } else if (*it == "maximize" || *it == "max") {
      p.sense = Sense::maximize;
    } else {
      fail("sense", "expected \"minimize\" or \"maximize\"");
    }
  }
  const Json& vars = field(j, "variables", "problem");
  if (!vars.is_array()) fail("variables", "expected a list of names");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::string where = "variables[" + std::to_string(i) + "]";
    if (!vars[i].is_string()) fail(where, "expected a variable name");
    try {
      p.add_variable(vars[i].get<std::string>());
    } catch (const Error& e) {
      fail(where, e.what());
    }
  }
  if (auto it = j.find("objective"); it != j.end()) p.objective = terms_from_json(*it, p, "objective");

  if (auto it = j.find("constraints"); it != j.end()) {
    if (!it->is_array()) fail("constraints", "expected a list");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "constraints[" + std::to_string(i) + "]";
      const Json& cj = (*it)[i];
      Constraint c;
      c.lhs = terms_from_json(field(cj, "terms", where), p, where + ".terms");
      c.rhs = rational_from_json(field(cj, "rhs", where), where + ".rhs");
      if (auto l = cj.find("lambda"); l != cj.end()) {
        c.penalty_weight = rational_from_json(*l, where + ".lambda");
        if (c.penalty_weight <= 0) fail(where + ".lambda", "must be positive");
      } else {
        c.penalty_weight = 0;
      }
      if (auto l = cj.find("lower"); l != cj.end()) c.lower = rational_from_json(*l, where + ".lower");
      if (auto l = cj.find("label"); l != cj.end()) {
        if (!l->is_string()) fail(where + ".label", "expected a string");
        c.label = l->get<std::string>();
      }
      p.constraints.push_back(std::move(c));
    }
  }
  const Rational fallback = default_penalty_weight(p.objective);
  for (auto& c : p.constraints)
    if (c.penalty_weight == 0) c.penalty_weight = fallback;
  p.validate();
  return p;
}

Json problem_to_json(const Problem& problem) {
  Json out;
  out["sense"] = problem.sense == Sense::maximize ? "maximize" : "minimize";
  Json vars = Json::array();
  for (const auto& v : problem.variables) vars.push_back(v.name);
  out["variables"] = std::move(vars);
  out["objective"] = to_json(problem.objective);
  Json cons = Json::array();
  for (const auto& c : problem.constraints) {
    Json cj;
    cj["terms"] = to_json(c.lhs);
    cj["rhs"] = to_json(c.rhs);
    cj["lambda"] = to_json(c.penalty_weight);
    if (c.lower) cj["lower"] = to_json(*c.lower);
    if (!c.label.empty()) cj["label"] = c.label;
    cons.push_back(std::move(cj));
  }
  out["constraints"] = std::move(cons);
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::invalid_input, path.string() + ": " + e.what());
  }
}

Problem read_problem(const std::filesystem::path& path) {
  const Json j = read_json_file(path);
  try {
    return problem_from_json(j);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

void write_problem(const Problem& problem, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::invalid_input, "cannot write '" + path.string() + "'");
  out << problem_to_json(problem).dump(2) << '\n';
}

InstanceGraph parse_dimacs_graph(std::istream& in, const std::string& source) {
  InstanceGraph g;
  bool header = false;
  std::size_t declared_edges = 0;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const std::string where = source + ":" + std::to_string(lineno);
    const auto tok = tokens(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (header) fail(where, "second problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) fail(where, "expected 'p edge <nodes> <edges>'");
      g.n = parse_count(tok[2], where);
      declared_edges = parse_count(tok[3], where);
      header = true;
    } else if (tok[0] == "e") {
      if (!header) fail(where, "edge before the 'p edge' line");
      if (tok.size() != 3 && tok.size() != 4) fail(where, "expected 'e <u> <v> [weight]'");
      GraphEdge e{parse_count(tok[1], where), parse_count(tok[2], where), 1};
      if (tok.size() == 4) e.weight = parse_rational(tok[3]);
      if (e.u < 1 || e.u > g.n || e.v < 1 || e.v > g.n)
        fail(where, "endpoint out of range 1.." + std::to_string(g.n));
      if (e.u == e.v) fail(where, "self-loop on vertex " + std::to_string(e.u));
      if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second)
        fail(where, "duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
      g.edges.push_back(std::move(e));
    } else {
      fail(where, "unrecognized line '" + line + "'");
    }
  }
  if (!header) fail(source, "missing 'p edge' line");
  if (g.edges.size() != declared_edges) {
    fail(source, "header declares " + std::to_string(declared_edges) + " edges but " +
                     std::to_string(g.edges.size()) + " are listed");
  }
  return g;
}

InstanceGraph graph_from_json(const Json& j) {
  InstanceGraph g;
  g.n = index_from_json(field(j, "n", "graph"), "graph.n");
  const Json& edges = field(j, "edges", "graph");
  if (!edges.is_array()) fail("graph.edges", "expected a list");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "graph.edges[" + std::to_string(i) + "]";
    const Json& e = edges[i];
    if (!e.is_array() || (e.size() != 2 && e.size() != 3)) fail(where, "expected [u, v] or [u, v, weight]");
    GraphEdge edge{index_from_json(e[0], where), index_from_json(e[1], where), 1};
    if (e.size() == 3) edge.weight = rational_from_json(e[2], where + "[2]");
    g.edges.push_back(std::move(edge));
  }
  g.validate();
  return g;
}

InstanceGraph read_graph(const std::filesystem::path& path) {
  auto in = open_input(path);
  char first = 0;
  while (in.get(first) && std::isspace(static_cast<unsigned char>(first))) {
  }
  in.clear();
  in.seekg(0);
  if (first == '{') {
    try {
      return graph_from_json(Json::parse(in));
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorKind::invalid_input, path.string() + ": " + e.what());
    }
  }
  return parse_dimacs_graph(in, path.string());
}

std::vector<Clause> parse_cnf(std::istream& in, const std::string& source) {
  std::vector<Clause> clauses;
  Clause current;
  bool header = false;
  std::size_t vars = 0;
  std::size_t declared = 0;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const std::string where = source + ":" + std::to_string(lineno);
    const auto tok = tokens(line);
    if (tok.empty() || tok[0] == "c" || tok[0] == "%") continue;
    if (tok[0] == "p") {
      if (header) fail(where, "second problem line");
      if (tok.size() != 4 || tok[1] != "cnf") fail(where, "expected 'p cnf <variables> <clauses>'");
      vars = parse_count(tok[2], where);
      declared = parse_count(tok[3], where);
      header = true;
      continue;
    }
    if (!header) fail(where, "clause before the 'p cnf' line");
    for (const auto& t : tok) {
      int lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stoi(t, &used);
        if (used != t.size()) throw std::invalid_argument(t);
      } catch (const std::exception&) {
        fail(where, "bad literal '" + t + "'");
      }
      if (lit == 0) {
        if (current.empty()) fail(where, "empty clause");
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (static_cast<std::size_t>(lit < 0 ? -lit : lit) > vars)
        fail(where, "literal " + t + " exceeds the declared " + std::to_string(vars) + " variables");
      current.push_back(lit);
    }
  }
  if (!header) fail(source, "missing 'p cnf' line");
  if (!current.empty()) clauses.push_back(std::move(current));
  if (clauses.size() != declared) {
    fail(source, "header declares " + std::to_string(declared) + " clauses but " + std::to_string(clauses.size()) +
                     " are listed");
  }
  return clauses;
}

std::vector<Clause> read_cnf(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_cnf(in, path.string());
}

KnapsackInstance knapsack_from_json(const Json& j) {
  KnapsackInstance k;
  k.values = rationals_from_json(field(j, "values", "knapsack"), "knapsack.values");
  k.weights = rationals_from_json(field(j, "weights", "knapsack"), "knapsack.weights");
  k.capacity = rational_from_json(field(j, "capacity", "knapsack"), "knapsack.capacity");
  if (k.values.size() != k.weights.size()) fail("knapsack", "values and weights differ in length");
  return k;
}

TspInstance tsp_from_json(const Json& j) {
  TspInstance t;
  t.graph = graph_from_json(j);
  if (auto it = j.find("subtours"); it != j.end()) {
    if (!it->is_array()) fail("subtours", "expected a list of vertex lists");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "subtours[" + std::to_string(i) + "]";
      const Json& q = (*it)[i];
      if (!q.is_array()) fail(where, "expected a list of vertices");
      std::vector<std::size_t> subset;
      for (std::size_t k = 0; k < q.size(); ++k) subset.push_back(index_from_json(q[k], where));
      t.subtours.push_back(std::move(subset));
    }
  }
  return t;
}

Json to_json(const ConstraintReport& r) {
  Json out;
  out["index"] = r.index;
  if (!r.label.empty()) out["label"] = r.label;
  out["min_lhs"] = to_json(r.min_lhs);
  out["min_exact"] = r.min_exact;
  out["max_lhs"] = to_json(r.max_lhs);
  out["max_exact"] = r.max_exact;
  out["feas"] = to_json(r.feas);
  out["dropped"] = r.dropped;
  out["slack_bits"] = r.slack_bits;
  Json slack = Json::array();
  for (std::size_t i = 0; i < r.slack_vars.size(); ++i)
    slack.push_back(Json{{"var", r.slack_vars[i].name}, {"coeff", to_json(r.slack_coefficients[i])}});
  out["slack"] = std::move(slack);
  out["penalty_weight"] = to_json(r.penalty_weight);
  out["residual"] = to_json(r.residual);
  out["penalty"] = to_json(r.penalty_poly);
  out["warnings"] = r.warnings;
  return out;
}

Json to_json(const DualizationReport& r) {
  Json out = Json::array();
  for (const auto& c : r) out.push_back(to_json(c));
  return out;
}

Json to_json(const Pubo& pubo) {
  Json out;
  Json vars = Json::array();
  for (const auto& v : pubo.variables) vars.push_back(Json{{"name", v.name}, {"slack", v.is_slack()}});
  out["variables"] = std::move(vars);
  out["negated"] = pubo.negated;
  out["constant_offset"] = to_json(pubo.constant_offset);
  out["objective"] = to_json(pubo.objective);
  out["constraints"] = to_json(pubo.provenance);
  return out;
}

Json hypergraph_summary(const DerivedHypergraph& h) {
  Json out;
  Json vars = Json::array();
  for (const auto& v : h.vertices) vars.push_back(v.name);
  out["vertices"] = std::move(vars);
  Json edges = Json::array();
  for (const auto& e : h.edges) edges.push_back(Json{{"support", to_json(e.support)}, {"terms", to_json(e.terms)}});
  out["edges"] = std::move(edges);
  out["singletons"] = to_json(h.singletons);
  out["constant"] = to_json(h.constant);
  out["vertex_count"] = h.vertices.size();
  out["edge_count"] = h.edges.size();
  out["max_degree"] = h.max_degree();
  out["max_edge_size"] = h.max_edge_size();
  out["linear"] = h.is_linear();
  if (auto k = h.uniformity()) {
    out["uniformity"] = *k;
  } else {
    out["uniformity"] = nullptr;
  }
  return out;
}

Json to_json(const BoundNote& b) {
  Json out{{"name", b.name}, {"formula", b.formula}};
  out["value"] = b.value ? Json(*b.value) : Json(nullptr);
  out["status"] = b.status;
  out["applicable"] = b.applicable;
  out["condition"] = b.condition;
  return out;
}

Json to_json(const EdgeColoring& c, const DerivedHypergraph& h) {
  Json out;
  out["method"] = to_string(c.method);
  out["colors"] = c.size();
  out["optimal"] = c.optimal;
  out["lower_bound"] = c.lower_bound;
  out["search_nodes"] = c.search_nodes;
  Json classes = Json::array();
  for (const auto& cls : c.classes) {
    Json members = Json::array();
    for (auto e : cls) members.push_back(to_json(h.edges.at(e).support));
    classes.push_back(std::move(members));
  }
  out["classes"] = std::move(classes);
  Json uppers = Json::array();
  for (const auto& b : c.upper_bound_refs) uppers.push_back(to_json(b));
  out["upper_bounds"] = std::move(uppers);
  return out;
}

Json to_json(const CircuitSchedule& s) {
  Json out;
  out["iterations"] = s.iterations;
  out["depth_per_iteration"] = s.depth_per_iteration();
  Json qubits = Json::array();
  for (const auto& v : s.qubits) qubits.push_back(v.name);
  out["qubits"] = std::move(qubits);
  out["global_phase"] = to_json(s.global_phase);
  Json layers = Json::array();
  for (const auto& layer : s.layers) {
    Json gates = Json::array();
    for (const auto& g : layer.gates) {
      Json gj{{"qubits", to_json(g.support)}, {"angle", g.angle}};
      if (layer.kind != LayerKind::mixer) gj["terms"] = to_json(g.terms);
      gates.push_back(std::move(gj));
    }
    layers.push_back(Json{{"kind", to_string(layer.kind)}, {"gates", std::move(gates)}});
  }
  out["layers"] = std::move(layers);
  Json plan = Json::object();
  for (const auto& [v, layer] : s.singleton_layer_plan) plan[v.name] = layer;
  out["singleton_layer_plan"] = std::move(plan);
  return out;
}

Json to_json(const FormulaCheck& c) {
  Json out{{"name", c.name}, {"formula", c.formula}, {"quantity", c.quantity}};
  out["formula_values"] = c.formula_values;
  out["computed"] = c.computed;
  out["matches"] = c.matches ? Json(*c.matches) : Json(nullptr);
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

Json to_json(const DepthReport& r) {
  Json out;
  out["family"] = r.family;
  out["structural_depth"] = r.structural_depth;
  out["coloring_depth"] = r.coloring_depth;
  out["singleton_overhead"] = r.singleton_overhead;
  out["theorem_depth"] = r.theorem_depth();
  out["coloring_optimal"] = r.coloring_optimal;
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  out["formula_checks"] = std::move(checks);
  out["discrepancy"] = r.discrepancy();
  return out;
}

namespace {

Json assignment_sets(const std::vector<std::uint64_t>& sets, const std::vector<VarId>& vars) {
  Json out = Json::array();
  for (auto z : sets) {
    Json a = Json::object();
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i].name] = static_cast<int>((z >> i) & 1U);
    out.push_back(std::move(a));
  }
  return out;
}

Json assignment_json(const Assignment& a) {
  Json out = Json::object();
  for (const auto& [v, bit] : a) out[v.name] = bit ? 1 : 0;
  return out;
}

}  // namespace

Json to_json(const PenaltyVerification& v, const Pubo& pubo) {
  const auto originals = pubo.original_variables();
  Json out;
  out["passed"] = v.passed;
  out["variables"] = v.variables;
  out["pubo_argmin"] = assignment_sets(v.pubo_argmin, originals);
  out["constrained_argmin"] = assignment_sets(v.constrained_argmin, originals);
  out["pubo_minimum"] = v.pubo_minimum ? to_json(*v.pubo_minimum) : Json(nullptr);
  out["constrained_minimum"] = v.constrained_minimum ? to_json(*v.constrained_minimum) : Json(nullptr);
  out["incomplete_slack_points"] = v.incomplete_slack_points;
  out["counterexample"] = v.counterexample ? assignment_json(*v.counterexample) : Json(nullptr);
  out["message"] = v.message;
  return out;
}

Json to_json(const EquivalenceResult& e) {
  Json out{{"equivalent", e.equivalent}};
  if (e.first_mismatch) {
    out["first_mismatch"] = assignment_json(*e.first_mismatch);
    out["delta"] = to_json(e.delta);
  }
  return out;
}

Json to_json(const std::vector<TermDifference>& diff) {
  Json out = Json::array();
  for (const auto& d : diff) {
    out.push_back(Json{{"vars", to_json(d.support)}, {"expected", to_json(d.expected)}, {"actual", to_json(d.actual)}});
  }
  return out;
}

namespace {

std::string dot_id(const std::string& name) {
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const DerivedHypergraph& h, const EdgeColoring* coloring) {
  std::vector<std::size_t> color(h.edges.size(), 0);
  if (coloring) {
    for (std::size_t c = 0; c < coloring->classes.size(); ++c)
      for (auto e : coloring->classes[c]) color.at(e) = c + 1;
  }
  std::ostringstream out;
  out << "graph derived {\n";
  out << "  node [shape=circle];\n";
  for (const auto& v : h.vertices) out << "  " << dot_id(v.name) << ";\n";
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const auto& s = h.edges[i].support;
    const std::string label = color[i] ? " [label=\"" + std::to_string(color[i]) + "\"]" : "";
    if (s.size() == 2) {
      out << "  " << dot_id(s[0].name) << " -- " << dot_id(s[1].name) << label << ";\n";
      continue;
    }
    const std::string aux = dot_id("e" + std::to_string(i + 1));
    out << "  " << aux << " [shape=square, label=\"" << (color[i] ? std::to_string(color[i]) : "") << "\"];\n";
    for (const auto& v : s) out << "  " << aux << " -- " << dot_id(v.name) << ";\n";
  }
  out << "}\n";
  return out.str();
}

bool ansi_enabled() {
  const char* no_color = std::getenv("NO_COLOR");
  if (no_color && *no_color) return false;
  return isatty(fileno(stdout)) != 0;
}

std::string circuit_sketch(const CircuitSchedule& s, bool ansi) {
  std::size_t name_width = 1;
  for (const auto& q : s.qubits) name_width = std::max(name_width, q.name.size());

  // Cell text per qubit per layer.
  std::vector<std::vector<std::string>> cells(s.qubits.size(), std::vector<std::string>(s.layers.size(), "-"));
  std::map<VarId, std::size_t> row;
  for (std::size_t i = 0; i < s.qubits.size(); ++i) row[s.qubits[i]] = i;
  std::vector<std::size_t> widths(s.layers.size(), 1);
  for (std::size_t l = 0; l < s.layers.size(); ++l) {
    const auto& layer = s.layers[l];
    for (std::size_t g = 0; g < layer.gates.size(); ++g) {
      const auto& gate = layer.gates[g];
      std::string text;
      if (layer.kind == LayerKind::mixer) {
        text = "B";
      } else if (gate.support.size() == 1) {
        text = "C";
      } else {
        text = "G" + std::to_string(g + 1);
      }
      for (const auto& v : gate.support) cells[row.at(v)][l] = text;
      widths[l] = std::max(widths[l], text.size());
    }
  }
  const char* on = ansi ? "\033[1;36m" : "";
  const char* off = ansi ? "\033[0m" : "";
  std::ostringstream out;
  out << std::string(name_width, ' ') << "  ";
  for (std::size_t l = 0; l < s.layers.size(); ++l) {
    std::string head = s.layers[l].kind == LayerKind::mixer ? "M" : std::to_string(l + 1);
    out << ' ' << head << std::string(widths[l] + 2 - head.size(), ' ');
  }
  out << '\n';
  for (std::size_t q = 0; q < s.qubits.size(); ++q) {
    const auto& name = s.qubits[q].name;
    out << name << std::string(name_width - name.size(), ' ') << " :";
    for (std::size_t l = 0; l < s.layers.size(); ++l) {
      const auto& text = cells[q][l];
      out << "-";
      if (text == "-") {
        out << std::string(widths[l], '-');
      } else {
        out << on << text << off << std::string(widths[l] - text.size(), '-');
      }
      out << "--";
    }
    out << '\n';
  }
  out << "depth per iteration: " << s.depth_per_iteration() << ", iterations: " << s.iterations << '\n';
  return out.str();
}

}  // namespace qaoadepth
