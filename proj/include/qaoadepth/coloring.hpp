#pragma once

#include "qaoadepth/hypergraph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qaoadepth {

enum class ColoringMethod { exact, misra_gries, greedy, merged };

std::string to_string(ColoringMethod method);

/// A documented chromatic-index upper bound and whether it applies.
struct BoundNote {
  std::string name;
  std::string formula;
  std::optional<std::size_t> value;  // absent for asymptotic statements
  std::string status;                // "theorem", "conjecture", "proven case", "asymptotic"
  bool applicable = false;
  std::string condition;
};

/// Proper hyperedge coloring: classes[c] lists hyperedge indices of color c.
struct EdgeColoring {
  std::vector<std::vector<std::size_t>> classes;
  ColoringMethod method = ColoringMethod::greedy;
  std::size_t lower_bound = 0;
  std::vector<BoundNote> upper_bound_refs;
  /// True when the search proved no coloring with fewer classes exists.
  bool optimal = false;
  std::size_t search_nodes = 0;

  std::size_t size() const noexcept { return classes.size(); }
};

struct ColoringCheck {
  bool ok = false;
  std::string message;
};

/// Every hyperedge in exactly one class and supports pairwise disjoint
/// within each class.
ColoringCheck check_coloring(const DerivedHypergraph& h, const EdgeColoring& coloring);

struct ColoringBounds {
  std::size_t lower = 0;
  std::vector<BoundNote> uppers;

  /// Smallest applicable bound that is a theorem (or a proven case).
  std::optional<std::size_t> best_upper() const;
};

/// Max vertex degree, a greedily grown pairwise-intersecting edge set and,
/// for up to 16 vertices, the matching-density bound; plus annotated
/// upper bounds from the literature.
ColoringBounds bounds(const DerivedHypergraph& h);

inline constexpr std::size_t kDefaultSearchBudget = 5'000'000;

/// Chromatic index by branch and bound. Returns nullopt when the node budget
/// runs out before optimality is proven.
std::optional<EdgeColoring> color_exact(const DerivedHypergraph& h, std::size_t budget = kDefaultSearchBudget);

/// Constructive Vizing: at most max-degree + 1 colors. Requires every
/// hyperedge to have exactly two vertices (throws Error(invalid_input)).
EdgeColoring color_misra_gries(const DerivedHypergraph& h);

enum class GreedyOrder { degree_desc, input };

/// First fit, lowest color index; ties in the order broken by edge index.
EdgeColoring color_greedy(const DerivedHypergraph& h, GreedyOrder order = GreedyOrder::degree_desc);

}  // namespace qaoadepth
