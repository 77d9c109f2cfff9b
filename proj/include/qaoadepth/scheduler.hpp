#pragma once

#include "qaoadepth/coloring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qaoadepth {

/// A diagonal gate exp(-i * angle * terms) on the qubits of `support`, or a
/// mixer rotation when it sits in the mixer layer.
struct Gate {
  Support support;
  Polynomial terms;
  std::string angle;
};

enum class LayerKind { cost, singleton, mixer };

std::string to_string(LayerKind kind);

struct Layer {
  LayerKind kind = LayerKind::cost;
  std::vector<Gate> gates;
};

/// Where single-variable terms go.
enum class SingletonPlacement {
  /// Into the first cost layer where the qubit is idle, otherwise a
  /// dedicated singleton layer.
  pack_idle,
  /// Always a dedicated singleton layer.
  separate_layer,
  /// Like pack_idle, but a singleton whose qubit is busy in every cost layer
  /// is folded into a gate that already acts on it.
  absorb_into_gates,
};

std::string to_string(SingletonPlacement placement);
std::optional<SingletonPlacement> parse_singleton_placement(std::string_view name);

struct ScheduleOptions {
  SingletonPlacement placement = SingletonPlacement::pack_idle;
};

/// One QAOA iteration: cost layers (one per color class), an optional
/// singleton layer and the mixer, repeated `iterations` times.
struct CircuitSchedule {
  std::vector<Layer> layers;
  std::vector<VarId> qubits;
  /// Layer index holding each singleton term (absent when folded into a gate).
  std::map<VarId, std::size_t> singleton_layer_plan;
  /// Constant term of the cost function; a global phase.
  Rational global_phase;
  std::size_t iterations = 1;
  std::size_t color_classes = 0;
  bool has_singleton_layer = false;

  std::size_t depth_per_iteration() const noexcept { return layers.size(); }
  /// All iterations in order, with angles gamma_k / beta_k.
  std::vector<Layer> unrolled() const;
};

/// Throws Error(invalid_input) when the coloring is not proper, and
/// Error(invalid_input) when iterations is 0.
CircuitSchedule schedule(const DerivedHypergraph& h, const EdgeColoring& coloring, std::size_t iterations = 1,
                         const ScheduleOptions& options = {});

/// One published closed-form expression compared with the pipeline.
struct FormulaCheck {
  std::string name;
  std::string formula;
  std::string quantity;
  /// Values the formula allows, when it evaluates to integers.
  std::vector<std::int64_t> formula_values;
  std::int64_t computed = 0;
  std::optional<bool> matches;
  std::string note;
};

struct DepthReport {
  std::size_t structural_depth = 0;
  std::size_t coloring_depth = 0;
  std::size_t singleton_overhead = 0;
  bool coloring_optimal = false;
  std::string family = "none";
  std::vector<FormulaCheck> checks;

  /// Color classes plus the mixer.
  std::size_t theorem_depth() const noexcept { return coloring_depth + 1; }
  bool discrepancy() const;
};

/// Structural report without family-specific checks.
DepthReport depth_report(const CircuitSchedule& s, const EdgeColoring& coloring);

/// Adds the closed-form checks that apply to the problem's generator family.
DepthReport analyze_family(const Problem& problem, const Pubo& pubo, const DerivedHypergraph& h,
                           const EdgeColoring& coloring, const CircuitSchedule& s);

/// iterations * structural depth; throws Error(invalid_input) for 0.
std::size_t total_depth(const DepthReport& report, std::size_t iterations);

}  // namespace qaoadepth
