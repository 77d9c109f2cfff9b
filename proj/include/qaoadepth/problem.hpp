#pragma once

#include "qaoadepth/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qaoadepth {

/// lhs <= rhs, optionally also lower <= lhs (a ranged constraint shares one
/// slack register for both sides).
struct Constraint {
  Polynomial lhs;
  Rational rhs;
  Rational penalty_weight = 1;
  std::optional<Rational> lower;
  std::string label;
};

enum class Sense { minimize, maximize };

enum class Family { none, maxcut, maxindset, vertex_cover, knapsack, tsp, sat };

std::string to_string(Family family);
std::optional<Family> parse_family(std::string_view name);

struct GraphEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  Rational weight = 1;
};

/// Simple undirected graph with vertices 1..n.
struct InstanceGraph {
  std::size_t n = 0;
  std::vector<GraphEdge> edges;

  /// Throws Error(invalid_input) on loops, duplicate edges or out-of-range
  /// endpoints.
  void validate() const;
  std::vector<std::size_t> degrees() const;  // index 0 unused
  std::size_t max_degree() const;
};

InstanceGraph wheel_graph(std::size_t n);
InstanceGraph star_graph(std::size_t leaves);
InstanceGraph complete_graph(std::size_t n);
InstanceGraph cycle_graph(std::size_t n);
InstanceGraph path_graph(std::size_t n);

/// A literal is +v for x_v and -v for its negation (v >= 1).
using Clause = std::vector<int>;

/// Generator-specific data kept for the closed-form depth analysis.
struct FamilyInfo {
  Family family = Family::none;
  std::optional<InstanceGraph> graph;
  std::vector<Clause> clauses;
  std::vector<Rational> weights;
  Rational capacity = 0;
  bool preprocessed = false;
  std::size_t subtour_constraints = 0;
};

/// min/max objective subject to polynomial inequality constraints over
/// binary variables.
struct Problem {
  Sense sense = Sense::minimize;
  Polynomial objective;
  std::vector<Constraint> constraints;
  std::vector<VarId> variables;
  FamilyInfo info;
  std::vector<std::string> warnings;

  /// Registers a fresh original variable; throws on duplicate names.
  const VarId& add_variable(const std::string& name);
  const VarId* find_variable(const std::string& name) const;

  /// Checks registration of every support variable, that no slack variables
  /// are present, and that every penalty weight is positive.
  void validate() const;

  /// Objective as a minimization (negated when sense is maximize).
  Polynomial normalized_objective() const;

  /// True when every constraint holds at the assignment.
  bool is_feasible(const Assignment& assignment) const;
};

/// 1 + sum of |coefficient| of the objective: dominates the objective's
/// range, so any integral violation costs more than it could gain.
Rational default_penalty_weight(const Polynomial& objective);

/// Sets every constraint's penalty weight.
void set_penalty_weight(Problem& problem, const Rational& lambda);

Problem make_maxcut(const InstanceGraph& g);
Problem make_maxindset(const InstanceGraph& g, std::optional<Rational> lambda = std::nullopt);
Problem make_vertex_cover(const InstanceGraph& g, std::optional<Rational> lambda = std::nullopt);
Problem make_knapsack(const std::vector<Rational>& values, const std::vector<Rational>& weights,
                      const Rational& capacity, std::optional<Rational> lambda = std::nullopt,
                      bool preprocess = false);
/// Edge-variable formulation; each subset Q yields sum_{e in Q} x_e <= |Q|-1.
Problem make_tsp(const InstanceGraph& g, const std::vector<std::vector<std::size_t>>& subtour_subsets,
                 std::optional<Rational> lambda = std::nullopt);
Problem make_sat(const std::vector<Clause>& clauses, std::optional<Rational> lambda = std::nullopt);

}  // namespace qaoadepth
