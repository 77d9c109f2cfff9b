#include "qaoadepth/error.hpp"
#include "qaoadepth/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <iostream>
#include <random>

using namespace qaoadepth;

namespace {

constexpr int kVerifyFailed = 5;

struct Options {
  std::string problem;
  std::string family;
  std::string graph;
  std::string cnf;
  std::string instance;
  std::size_t random_vertices = 0;
  double edge_probability = 0.5;
  std::uint64_t seed = 1;
  bool preprocess = false;
  std::optional<std::size_t> gate_width;
  std::size_t exact_limit = 20;
  std::string lambda;
  std::size_t iterations = 1;
  std::string format = "json";
  std::string out;
  std::size_t budget = kDefaultSearchBudget;
  bool merge = false;
  std::string placement = "pack";
  std::string expected_penalty;
  std::size_t verify_limit = kDefaultVerifyLimit;
};

InstanceGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  InstanceGraph g;
  g.n = n;
  for (std::size_t u = 1; u <= n; ++u)
    for (std::size_t v = u + 1; v <= n; ++v)
      if (coin(rng)) g.edges.push_back({u, v, 1});
  return g;
}

struct LoadedProblem {
  Problem problem;
  Json echo;
};

LoadedProblem load(const Options& o) {
  std::optional<Rational> lambda;
  if (!o.lambda.empty()) lambda = parse_rational(o.lambda);
  if (!o.problem.empty()) {
    if (!o.family.empty()) throw Error(ErrorKind::invalid_input, "--problem and --family are exclusive");
    const Json j = read_json_file(o.problem);
    Problem p;
    try {
      p = problem_from_json(j);
    } catch (const Error& e) {
      throw Error(e.kind(), o.problem + ": " + e.what());
    }
    return {std::move(p), Json{{"problem", o.problem}}};
  }
  if (o.family.empty()) throw Error(ErrorKind::invalid_input, "give --problem FILE or --family NAME");
  const auto family = parse_family(o.family);
  if (!family || *family == Family::none) throw Error(ErrorKind::invalid_input, "unknown family '" + o.family + "'");

  Json echo{{"family", o.family}};
  auto graph = [&]() {
    if (!o.graph.empty()) {
      echo["graph"] = o.graph;
      return read_graph(o.graph);
    }
    if (o.random_vertices > 0) {
      echo["random"] = Json{{"n", o.random_vertices}, {"p", o.edge_probability}, {"seed", o.seed}};
      return random_graph(o.random_vertices, o.edge_probability, o.seed);
    }
    throw Error(ErrorKind::invalid_input, "family '" + o.family + "' needs --graph FILE or --random N");
  };

  switch (*family) {
    case Family::maxcut: return {make_maxcut(graph()), echo};
    case Family::maxindset: return {make_maxindset(graph(), lambda), echo};
    case Family::vertex_cover: return {make_vertex_cover(graph(), lambda), echo};
    case Family::sat: {
      if (o.cnf.empty()) throw Error(ErrorKind::invalid_input, "family 'sat' needs --cnf FILE");
      echo["cnf"] = o.cnf;
      return {make_sat(read_cnf(o.cnf), lambda), echo};
    }
    case Family::knapsack: {
      if (o.instance.empty()) throw Error(ErrorKind::invalid_input, "family 'knapsack' needs --instance FILE");
      echo["instance"] = o.instance;
      echo["preprocess"] = o.preprocess;
      const auto k = knapsack_from_json(read_json_file(o.instance));
      return {make_knapsack(k.values, k.weights, k.capacity, lambda, o.preprocess), echo};
    }
    case Family::tsp: {
      if (o.instance.empty()) throw Error(ErrorKind::invalid_input, "family 'tsp' needs --instance FILE");
      echo["instance"] = o.instance;
      const auto t = tsp_from_json(read_json_file(o.instance));
      return {make_tsp(t.graph, t.subtours, lambda), echo};
    }
    case Family::none: break;
  }
  throw Error(ErrorKind::invalid_input, "unknown family '" + o.family + "'");
}

PipelineConfig config_from(const Options& o) {
  PipelineConfig c;
  c.gate_width = o.gate_width;
  c.exact_limit = o.exact_limit;
  c.iterations = o.iterations;
  if (!o.lambda.empty()) c.lambda = parse_rational(o.lambda);
  c.budget = o.budget;
  c.merge = o.merge;
  auto placement = parse_singleton_placement(o.placement);
  if (!placement) throw Error(ErrorKind::invalid_input, "unknown singleton placement '" + o.placement + "'");
  c.placement = *placement;
  return c;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Error(ErrorKind::invalid_input, "cannot write '" + o.out + "'");
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_format(const Options& o, std::initializer_list<const char*> allowed, const char* command) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw Error(ErrorKind::invalid_input, std::string("--format ") + o.format + " is not available for " + command);
}

std::string text_report(const PipelineResult& r, const PipelineConfig& c) {
  std::ostringstream out;
  out << "variables:          " << r.pubo.variables.size() << " (" << r.pubo.slack_variables().size()
      << " slack)\n";
  out << "hyperedges:         " << r.hypergraph.edges.size() << " (" << r.raw.edges.size()
      << " before absorption)\n";
  out << "max degree:         " << r.hypergraph.max_degree() << '\n';
  out << "colors:             " << r.coloring.size() << " (" << to_string(r.coloring.method)
      << (r.coloring.optimal ? ", optimal" : ", not proven optimal") << ")\n";
  out << "structural depth:   " << r.report.structural_depth << " = " << r.report.coloring_depth << " + "
      << r.report.singleton_overhead << " + 1\n";
  out << "total depth (p=" << c.iterations << "): " << total_depth(r.report, c.iterations) << '\n';
  for (const auto& check : r.report.checks) {
    out << "check " << check.name << ": " << check.formula << " -> ";
    if (check.formula_values.empty()) {
      out << "not evaluated";
    } else {
      for (std::size_t i = 0; i < check.formula_values.size(); ++i)
        out << (i ? " or " : "") << check.formula_values[i];
    }
    out << "; " << check.quantity << " = " << check.computed;
    if (check.matches) out << (*check.matches ? " [agrees]" : " [DIFFERS]");
    out << '\n';
  }
  if (r.equivalence) out << "phase check:        " << (r.equivalence->equivalent ? "equivalent" : "MISMATCH") << '\n';
  for (const auto& w : r.warnings) out << "warning: " << w << '\n';
  return out.str();
}

int run(const std::string& command, const Options& o) {
  auto loaded = load(o);
  const PipelineConfig config = config_from(o);

  if (command == "dualize") {
    require_format(o, {"json", "text"}, "dualize");
    Problem p = loaded.problem;
    if (config.lambda) set_penalty_weight(p, *config.lambda);
    const Pubo pubo = dualize(p);
    if (o.format == "text") {
      std::string text = "minimize " + pubo.objective.to_string() + "\n";
      for (const auto& c : pubo.provenance) {
        text += "constraint " + std::to_string(c.index) + ": feas " + to_string(c.feas) + ", " +
                std::to_string(c.slack_bits) + " slack bits" + (c.dropped ? " (dropped)" : "") + "\n";
      }
      emit(o, text);
    } else {
      emit(o, dump(to_json(pubo)));
    }
    return 0;
  }

  if (command == "verify") {
    require_format(o, {"json"}, "verify");
    Problem p = loaded.problem;
    if (config.lambda) set_penalty_weight(p, *config.lambda);
    const Pubo pubo = dualize(p);
    Json out;
    const auto penalty = verify_penalty(pubo, p, o.verify_limit);
    out["penalty"] = to_json(penalty, pubo);
    bool ok = penalty.passed;
    const auto result = run_pipeline(loaded.problem, config);
    out["equivalence"] = result.equivalence ? to_json(*result.equivalence) : Json(nullptr);
    if (result.equivalence) ok = ok && result.equivalence->equivalent;
    if (!o.expected_penalty.empty()) {
      // Compared against the squared residuals before weighting.
      const Json j = read_json_file(o.expected_penalty);
      Json wrapped{{"variables", Json::array()}, {"objective", j}};
      for (const auto& v : pubo.variables) wrapped["variables"].push_back(v.name);
      const Polynomial expected = problem_from_json(wrapped).objective;
      Polynomial actual;
      for (const auto& c : pubo.provenance)
        if (!c.dropped) actual += square(c.residual);
      // Slack variables are renamed to originals in the parsed reference.
      Polynomial renamed;
      for (const auto& [support, coeff] : actual.terms()) {
        Support s;
        for (const auto& v : support) s.push_back(VarId::original(v.name));
        renamed.add_term(std::move(s), coeff);
      }
      const auto diff = diff_expansion(expected, renamed);
      out["expected_penalty_diff"] = to_json(diff);
      ok = ok && diff.empty();
    }
    out["passed"] = ok;
    emit(o, dump(out));
    return ok ? 0 : kVerifyFailed;
  }

  const PipelineResult r = run_pipeline(std::move(loaded.problem), config);
  const int code = r.budget_exceeded ? static_cast<int>(ErrorKind::budget_exceeded) : 0;
  if (r.budget_exceeded) std::cerr << "warning: search budget exceeded; results are heuristic\n";

  if (command == "graph") {
    require_format(o, {"json", "dot"}, "graph");
    emit(o, o.format == "dot" ? to_dot(r.hypergraph) : dump(hypergraph_summary(r.hypergraph)));
  } else if (command == "color") {
    require_format(o, {"json", "dot"}, "color");
    if (o.format == "dot") {
      emit(o, to_dot(r.hypergraph, &r.coloring));
    } else {
      Json j = to_json(r.coloring, r.hypergraph);
      j["heuristic"] = r.budget_exceeded;
      emit(o, dump(j));
    }
  } else if (command == "schedule") {
    require_format(o, {"json", "text"}, "schedule");
    if (o.format == "text") {
      emit(o, circuit_sketch(r.schedule, o.out.empty() && ansi_enabled()));
    } else {
      Json j = to_json(r.schedule);
      j["heuristic"] = r.budget_exceeded;
      emit(o, dump(j));
    }
  } else {
    require_format(o, {"json", "text", "dot"}, "analyze");
    if (o.format == "text") {
      emit(o, text_report(r, config));
    } else if (o.format == "dot") {
      emit(o, to_dot(r.hypergraph, &r.coloring));
    } else {
      emit(o, dump(run_artifact(r, config, loaded.echo)));
    }
  }
  return code;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--problem", o.problem, "Problem JSON file");
  cmd->add_option("--family", o.family, "Generator: maxcut, maxindset, vertex-cover, knapsack, tsp, sat");
  cmd->add_option("--graph", o.graph, "Graph file (DIMACS edge format or JSON)");
  cmd->add_option("--cnf", o.cnf, "DIMACS CNF file for the sat family");
  cmd->add_option("--instance", o.instance, "Knapsack or TSP instance JSON");
  cmd->add_option("--random", o.random_vertices, "Random graph on N vertices instead of --graph");
  cmd->add_option("--edge-probability", o.edge_probability, "Edge probability for --random")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--seed", o.seed, "Seed for --random");
  cmd->add_flag("--preprocess", o.preprocess, "Knapsack: use the lower bound W - max weight");
  cmd->add_option("--gate-width", o.gate_width, "Widest gate allowed (default 2)")->check(CLI::Range(2, 64));
  cmd->add_option("--exact-limit", o.exact_limit, "Color exactly up to this many hyperedges");
  cmd->add_option("--lambda", o.lambda, "Penalty weight for every constraint");
  cmd->add_option("--iterations,-p", o.iterations, "QAOA iterations")->check(CLI::PositiveNumber);
  cmd->add_option("--format", o.format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
  cmd->add_option("--out", o.out, "Write to a file instead of stdout");
  cmd->add_option("--budget", o.budget, "Node budget for exact searches");
  cmd->add_flag("--merge", o.merge, "Fuse overlapping gates of one color up to the gate width");
  cmd->add_option("--singletons", o.placement, "Single-qubit term placement: pack, separate or absorb")
      ->check(CLI::IsMember({"pack", "separate", "absorb"}));
  cmd->add_option("--expected-penalty", o.expected_penalty, "verify: JSON term list to diff against the squared residuals");
  cmd->add_option("--verify-limit", o.verify_limit, "verify: most variables to enumerate");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QAOA circuit depth from problem structure"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<const char*, const char*>> commands{
      {"dualize", "Turn constraints into penalty terms"},
      {"graph", "Build the derived hypergraph"},
      {"color", "Color the hypergraph's edges"},
      {"schedule", "Lay out one QAOA iteration"},
      {"analyze", "Run the whole pipeline and report depth"},
      {"verify", "Check the penalty and schedule by exhaustive enumeration"},
  };
  for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help), o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ErrorKind::invalid_input);
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ErrorKind::invalid_input);
  }
}
