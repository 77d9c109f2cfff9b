#pragma once

#include "qaoadepth/coloring.hpp"

#include <optional>

namespace qaoadepth {

struct MergeResult {
  /// One hyperedge per merged gate.
  DerivedHypergraph merged;
  /// Coloring of merged's hyperedges with the minimum number of classes.
  EdgeColoring coloring;
};

/// Joint gate merging and coloring with the fewest colors. Hyperedges that
/// share a color and overlap are fused into one gate, which must touch at
/// most `limit` qubits; gates in one color act on disjoint qubits.
///
/// Branch and bound over edges in descending conflict degree, colors opened
/// in first-use order. Returns nullopt when the node budget runs out.
/// Throws Error(gate_width) if a single hyperedge is already too wide.
std::optional<MergeResult> merge_exact(const DerivedHypergraph& h, GateWidthLimit limit,
                                       std::size_t budget = kDefaultSearchBudget);

}  // namespace qaoadepth
