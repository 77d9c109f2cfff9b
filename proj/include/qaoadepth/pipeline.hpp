#pragma once

#include "qaoadepth/io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qaoadepth {

inline constexpr const char* kToolVersion = "0.1.0";

struct PipelineConfig {
  /// Widest gate allowed. Unset means 2, and a wider hyperedge is an error
  /// asking for an explicit width.
  std::optional<std::size_t> gate_width;
  /// Hypergraphs with more edges than this are colored heuristically.
  std::size_t exact_limit = 20;
  std::size_t iterations = 1;
  std::optional<Rational> lambda;
  std::size_t budget = kDefaultSearchBudget;
  /// Fuse overlapping same-colored edges into wider gates (needs width > 2).
  bool merge = false;
  SingletonPlacement placement = SingletonPlacement::pack_idle;
  /// Variable cutoff for the phase-table equivalence check.
  std::size_t simulate_limit = 20;
};

struct PipelineResult {
  Problem problem;
  Pubo pubo;
  /// Hypergraph straight from the Pubo's supports.
  DerivedHypergraph raw;
  /// After subset absorption (and merging, when enabled); the one colored.
  DerivedHypergraph hypergraph;
  EdgeColoring coloring;
  CircuitSchedule schedule;
  DepthReport report;
  std::optional<EquivalenceResult> equivalence;
  /// The exact search ran out of budget; coloring is heuristic.
  bool budget_exceeded = false;
  std::vector<std::string> warnings;
};

/// Heuristic coloring: the better of first-fit and, for graphs, Misra-Gries.
EdgeColoring color_heuristic(const DerivedHypergraph& h);

/// Dualize, build and absorb the hypergraph, color, schedule and analyze.
/// Throws Error for invalid input, infeasible constraints and gate-width
/// violations; a blown search budget is reported in the result instead.
PipelineResult run_pipeline(Problem problem, const PipelineConfig& config);

Json to_json(const PipelineConfig& config);

/// Everything the pipeline produced. Deterministic for a given input and
/// configuration.
Json run_artifact(const PipelineResult& result, const PipelineConfig& config, const Json& input);

}  // namespace qaoadepth
