#pragma once

#include "qaoadepth/problem.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qaoadepth {

/// What happened to one constraint during dualization.
struct ConstraintReport {
  std::size_t index = 0;  // 1-based
  std::string label;
  Rational min_lhs;
  bool min_exact = false;
  Rational max_lhs;
  bool max_exact = false;
  /// Distance from the most feasible point to the bound, rhs - min(lhs)
  /// (or rhs - lower for a ranged constraint).
  Rational feas;
  std::uint32_t slack_bits = 0;
  std::vector<VarId> slack_vars;
  std::vector<Rational> slack_coefficients;  // 1, 2, 4, ...
  bool dropped = false;
  Rational penalty_weight;
  /// lhs + sum 2^j s_j - rhs, the expression that gets squared.
  Polynomial residual;
  /// penalty_weight * residual^2.
  Polynomial penalty_poly;
  std::vector<std::string> warnings;
};

using DualizationReport = std::vector<ConstraintReport>;

/// Unconstrained form: minimize objective over original and slack variables.
struct Pubo {
  Polynomial objective;
  std::vector<VarId> variables;  // originals (problem order), then slacks
  DualizationReport provenance;
  Rational constant_offset;
  /// True when a maximization was negated into a minimization.
  bool negated = false;

  std::vector<VarId> original_variables() const;
  std::vector<VarId> slack_variables() const;
};

struct DualizeOptions {
  std::size_t exact_limit = kDefaultExactLimit;
};

/// Replaces every constraint lhs <= rhs by
///   penalty_weight * (lhs + sum_j 2^j s_j - rhs)^2
/// with ceil(log2(feas + 1)) fresh slack bits. Redundant constraints are
/// dropped. Throws Error(infeasible_constraint) when no assignment can satisfy
/// a constraint.
Pubo dualize(const Problem& problem, const DualizeOptions& options = {});

struct PenaltyVerification {
  bool passed = false;
  std::size_t variables = 0;
  /// Argmin sets over original variables; bit i = Pubo::original_variables()[i].
  std::vector<std::uint64_t> pubo_argmin;
  std::vector<std::uint64_t> constrained_argmin;
  std::optional<Rational> pubo_minimum;
  std::optional<Rational> constrained_minimum;
  /// Feasible points whose best slack setting leaves a non-zero penalty.
  std::size_t incomplete_slack_points = 0;
  std::optional<Assignment> counterexample;
  std::string message;
};

inline constexpr std::size_t kDefaultVerifyLimit = 20;

/// Exhaustive check that the Pubo, minimized over slacks, has the same
/// argmin set over the original variables as the constrained problem.
/// Throws Error(invalid_input) when more than var_limit variables are
/// involved.
PenaltyVerification verify_penalty(const Pubo& pubo, const Problem& original,
                                   std::size_t var_limit = kDefaultVerifyLimit);

/// One coefficient difference between two polynomials.
struct TermDifference {
  Support support;
  Rational expected;
  Rational actual;
};

/// Terms where a reference expansion disagrees with a computed one.
std::vector<TermDifference> diff_expansion(const Polynomial& expected, const Polynomial& actual);

}  // namespace qaoadepth
