#include "qaoadepth/phase_sim.hpp"

#include "qaoadepth/error.hpp"

#include <algorithm>
#include <map>

namespace qaoadepth {

PhaseTable::PhaseTable(std::vector<VarId> variables, BigInt denominator, std::vector<std::int64_t> numerators)
    : variables_(std::move(variables)), denominator_(std::move(denominator)), numerators_(std::move(numerators)) {}

PhaseTable::PhaseTable(std::vector<VarId> variables, std::vector<Rational> values)
    : variables_(std::move(variables)), exact_(std::move(values)) {}

Rational PhaseTable::at(std::uint64_t z) const {
  if (z >= size()) throw Error(ErrorKind::invalid_input, "basis state index out of range");
  if (!exact_.empty()) return exact_[z];
  if (numerators_.empty()) return Rational(0);
  return Rational(BigInt(numerators_[z]), denominator_);
}

bool PhaseTable::operator==(const PhaseTable& other) const {
  if (variables_ != other.variables_) return false;
  for (std::uint64_t z = 0; z < size(); ++z)
    if (at(z) != other.at(z)) return false;
  return true;
}

namespace {

struct ScaledTerm {
  std::uint64_t mask;
  Rational coefficient;
};

std::vector<ScaledTerm> collect_terms(const CircuitSchedule& schedule, const std::map<VarId, std::size_t>& index) {
  std::vector<ScaledTerm> out;
  if (schedule.global_phase != 0) out.push_back({0, schedule.global_phase});
  for (const auto& layer : schedule.layers) {
    if (layer.kind == LayerKind::mixer) continue;
    for (const auto& gate : layer.gates) {
      for (const auto& [support, c] : gate.terms.terms()) {
        std::uint64_t mask = 0;
        for (const auto& v : support) {
          auto it = index.find(v);
          if (it == index.end()) throw Error(ErrorKind::invalid_input, "gate acts on unknown qubit " + v.name);
          mask |= std::uint64_t{1} << it->second;
        }
        out.push_back({mask, c});
      }
    }
  }
  return out;
}

}  // namespace

PhaseTable simulate_cost_phases(const CircuitSchedule& schedule, std::size_t var_limit) {
  return simulate_cost_phases(schedule, schedule.qubits, var_limit);
}

PhaseTable simulate_cost_phases(const CircuitSchedule& schedule, std::span<const VarId> order,
                                std::size_t var_limit) {
  const std::size_t n = order.size();
  if (n > var_limit || n > kHardEnumerationLimit) {
    throw Error(ErrorKind::invalid_input, "phase simulation over " + std::to_string(n) +
                                              " qubits exceeds the limit of " +
                                              std::to_string(std::min(var_limit, kHardEnumerationLimit)));
  }
  std::map<VarId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(order[i], i);
  const auto terms = collect_terms(schedule, index);
  std::vector<VarId> vars(order.begin(), order.end());
  const std::size_t states = std::size_t{1} << n;

  BigInt denominator = 1;
  for (const auto& t : terms) denominator = boost::multiprecision::lcm(denominator, boost::multiprecision::denominator(t.coefficient));
  BigInt magnitude = 0;
  std::vector<std::int64_t> cell(states, 0);
  bool fits = true;
  const BigInt limit = BigInt(1) << 62;
  for (const auto& t : terms) {
    const BigInt scaled = boost::multiprecision::numerator(t.coefficient) * (denominator / boost::multiprecision::denominator(t.coefficient));
    magnitude += boost::multiprecision::abs(scaled);
    if (magnitude >= limit) {
      fits = false;
      break;
    }
    cell[t.mask] += static_cast<std::int64_t>(scaled);
  }

  if (fits) {
    // Sum over subsets: phase(z) = sum of cells whose mask is contained in z.
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t bit = std::size_t{1} << b;
      for (std::size_t z = 0; z < states; ++z)
        if (z & bit) cell[z] += cell[z ^ bit];
    }
    return PhaseTable(std::move(vars), denominator, std::move(cell));
  }

  std::vector<Rational> exact(states);
  for (const auto& t : terms) exact[t.mask] += t.coefficient;
  for (std::size_t b = 0; b < n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t z = 0; z < states; ++z)
      if (z & bit) exact[z] += exact[z ^ bit];
  }
  return PhaseTable(std::move(vars), std::move(exact));
}

EquivalenceResult check_equivalence(const CircuitSchedule& schedule, const Pubo& pubo, std::size_t var_limit) {
  std::vector<VarId> order = schedule.qubits;
  for (const auto& v : pubo.objective.variables()) {
    if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
  }
  const PhaseTable table = simulate_cost_phases(schedule, order, var_limit);
  const PackedPolynomial objective(pubo.objective, order);

  EquivalenceResult r;
  for (std::uint64_t z = 0; z < table.size(); ++z) {
    const Rational delta = table.at(z) - objective.value(z);
    if (delta != 0) {
      Assignment a;
      for (std::size_t i = 0; i < order.size(); ++i) a[order[i]] = (z >> i) & 1U;
      r.first_mismatch = std::move(a);
      r.delta = delta;
      r.index = z;
      return r;
    }
  }
  r.equivalent = true;
  return r;
}

}  // namespace qaoadepth
