#include "qaoadepth/pipeline.hpp"

#include "qaoadepth/error.hpp"

namespace qaoadepth {

EdgeColoring color_heuristic(const DerivedHypergraph& h) {
  EdgeColoring best = color_greedy(h, GreedyOrder::degree_desc);
  if (h.uniformity().value_or(2) == 2) {
    EdgeColoring mg = color_misra_gries(h);
    if (mg.size() < best.size()) best = std::move(mg);
  }
  return best;
}

PipelineResult run_pipeline(Problem problem, const PipelineConfig& config) {
  if (config.iterations == 0) throw Error(ErrorKind::invalid_input, "iterations must be at least 1");
  if (config.lambda) {
    if (*config.lambda <= 0) throw Error(ErrorKind::invalid_input, "lambda must be positive");
    set_penalty_weight(problem, *config.lambda);
  }
  problem.validate();

  PipelineResult r;
  r.warnings = problem.warnings;
  r.pubo = dualize(problem);
  for (const auto& c : r.pubo.provenance)
    for (const auto& w : c.warnings) r.warnings.push_back(w);
  r.raw = build(r.pubo);

  const GateWidthLimit limit(config.gate_width.value_or(2));
  r.hypergraph = absorb_subsets(r.raw, limit);
  if (!config.gate_width && r.hypergraph.max_edge_size() > 2) {
    throw Error(ErrorKind::gate_width, "the cost function needs gates on " +
                                           std::to_string(r.hypergraph.max_edge_size()) +
                                           " qubits; pass an explicit gate width");
  }
  check_gate_width(r.hypergraph, limit);

  bool colored = false;
  if (config.merge) {
    if (r.hypergraph.edges.size() > config.exact_limit) {
      r.warnings.push_back("merging skipped: more hyperedges than the exact limit");
    } else if (auto merged = merge_exact(r.hypergraph, limit, config.budget)) {
      r.hypergraph = std::move(merged->merged);
      r.coloring = std::move(merged->coloring);
      colored = true;
    } else {
      r.budget_exceeded = true;
      r.warnings.push_back("merge search budget exceeded; gates left unmerged");
    }
  }
  if (!colored) {
    if (r.hypergraph.edges.size() <= config.exact_limit) {
      if (auto exact = color_exact(r.hypergraph, config.budget)) {
        r.coloring = std::move(*exact);
        colored = true;
      } else {
        r.budget_exceeded = true;
        r.warnings.push_back("exact coloring budget exceeded; heuristic coloring used");
      }
    }
    if (!colored) {
      r.coloring = color_heuristic(r.hypergraph);
    }
  }

  r.schedule = schedule(r.hypergraph, r.coloring, config.iterations, ScheduleOptions{config.placement});
  r.report = analyze_family(problem, r.pubo, r.hypergraph, r.coloring, r.schedule);
  if (r.schedule.qubits.size() <= config.simulate_limit) {
    r.equivalence = check_equivalence(r.schedule, r.pubo, config.simulate_limit);
  }
  r.problem = std::move(problem);
  return r;
}

Json to_json(const PipelineConfig& config) {
  Json out;
  out["gate_width"] = config.gate_width ? Json(*config.gate_width) : Json(nullptr);
  out["exact_limit"] = config.exact_limit;
  out["iterations"] = config.iterations;
  out["lambda"] = config.lambda ? to_json(*config.lambda) : Json(nullptr);
  out["budget"] = config.budget;
  out["merge"] = config.merge;
  out["singleton_placement"] = to_string(config.placement);
  out["simulate_limit"] = config.simulate_limit;
  return out;
}

Json run_artifact(const PipelineResult& r, const PipelineConfig& config, const Json& input) {
  Json out;
  out["tool"] = "qaoa-depth";
  out["version"] = kToolVersion;
  out["config"] = to_json(config);
  out["input"] = input;
  out["problem"] = problem_to_json(r.problem);
  out["dualization"] = to_json(r.pubo);
  out["hypergraph"] = hypergraph_summary(r.hypergraph);
  out["hypergraph"]["edges_before_absorption"] = r.raw.edges.size();
  out["coloring"] = to_json(r.coloring, r.hypergraph);
  out["depth"] = to_json(r.report);
  out["total_depth"] = total_depth(r.report, config.iterations);
  out["schedule"] = to_json(r.schedule);
  out["equivalence"] = r.equivalence ? to_json(*r.equivalence) : Json(nullptr);
  out["heuristic"] = r.budget_exceeded;
  out["warnings"] = r.warnings;
  return out;
}

}  // namespace qaoadepth
