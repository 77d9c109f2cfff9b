#pragma once

#include "qaoadepth/scheduler.hpp"

#include <optional>
#include <span>
#include <vector>

namespace qaoadepth {

/// Phase exponent (in units of gamma) accumulated by the diagonal layers of
/// one iteration, for every computational basis state. Bit i of a state
/// index is variables[i].
class PhaseTable {
 public:
  PhaseTable() = default;
  PhaseTable(std::vector<VarId> variables, BigInt denominator, std::vector<std::int64_t> numerators);
  PhaseTable(std::vector<VarId> variables, std::vector<Rational> values);

  const std::vector<VarId>& variables() const noexcept { return variables_; }
  std::size_t size() const noexcept { return std::size_t{1} << variables_.size(); }
  Rational at(std::uint64_t z) const;
  bool operator==(const PhaseTable& other) const;

 private:
  std::vector<VarId> variables_;
  BigInt denominator_ = 1;
  std::vector<std::int64_t> numerators_;
  std::vector<Rational> exact_;  // used when the integer path would overflow
};

/// Sums every gate of every cost and singleton layer, plus the global phase,
/// at each basis state; the mixer is skipped. Throws Error(invalid_input)
/// when more than var_limit variables are involved.
PhaseTable simulate_cost_phases(const CircuitSchedule& schedule, std::size_t var_limit = 20);
PhaseTable simulate_cost_phases(const CircuitSchedule& schedule, std::span<const VarId> order,
                                std::size_t var_limit = 20);

struct EquivalenceResult {
  bool equivalent = false;
  std::optional<Assignment> first_mismatch;
  /// schedule phase minus objective value at the mismatch.
  Rational delta;
  std::uint64_t index = 0;
};

/// Compares the schedule's phase table with the Pubo objective (constant
/// included) on every basis state.
EquivalenceResult check_equivalence(const CircuitSchedule& schedule, const Pubo& pubo, std::size_t var_limit = 20);

}  // namespace qaoadepth
