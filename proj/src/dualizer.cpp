#include "qaoadepth/dualizer.hpp"

#include "qaoadepth/error.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace qaoadepth {

std::vector<VarId> Pubo::original_variables() const {
  std::vector<VarId> out;
  for (const auto& v : variables)
    if (!v.is_slack()) out.push_back(v);
  return out;
}

std::vector<VarId> Pubo::slack_variables() const {
  std::vector<VarId> out;
  for (const auto& v : variables)
    if (v.is_slack()) out.push_back(v);
  return out;
}

namespace {

std::string describe(const ConstraintReport& r) {
  std::string s = "constraint " + std::to_string(r.index);
  if (!r.label.empty()) s += " (" + r.label + ")";
  return s;
}

}  // namespace

Pubo dualize(const Problem& problem, const DualizeOptions& options) {
  problem.validate();

  Pubo out;
  out.variables = problem.variables;
  out.negated = problem.sense == Sense::maximize;
  out.objective = problem.normalized_objective();

  std::set<std::string> taken;
  for (const auto& v : problem.variables) taken.insert(v.name);
  auto fresh_name = [&](std::uint32_t constraint, std::uint32_t bit) {
    std::string name = "d" + std::to_string(constraint) + "_" + std::to_string(bit);
    while (taken.count(name)) name = "_" + name;
    taken.insert(name);
    return name;
  };

  for (std::size_t i = 0; i < problem.constraints.size(); ++i) {
    const Constraint& c = problem.constraints[i];
    ConstraintReport r;
    r.index = i + 1;
    r.label = c.label;
    r.penalty_weight = c.penalty_weight;

    const CubeBound lo = minimum_over_cube(c.lhs, options.exact_limit);
    const CubeBound hi = maximum_over_cube(c.lhs, options.exact_limit);
    r.min_lhs = lo.value;
    r.min_exact = lo.exact;
    r.max_lhs = hi.value;
    r.max_exact = hi.exact;
    if (!lo.exact || !hi.exact) {
      r.warnings.push_back("support exceeds the exact limit; interval bounds used for the lhs range");
    }

    // An interval lower bound never exceeds the true minimum, so this test is
    // sound in both modes.
    if (lo.value > c.rhs) {
      throw Error(ErrorKind::infeasible_constraint, describe(r) + " is infeasible: min lhs = " + lo.value.str() +
                                                        " exceeds rhs = " + c.rhs.str());
    }
    if (c.lower && hi.value < *c.lower) {
      throw Error(ErrorKind::infeasible_constraint, describe(r) + " is infeasible: max lhs = " + hi.value.str() +
                                                        " is below the lower bound " + c.lower->str());
    }

    if (hi.value <= c.rhs && (!c.lower || lo.value >= *c.lower)) {
      r.dropped = true;
      r.feas = c.rhs - lo.value;
      r.warnings.push_back("redundant: every assignment satisfies it");
      out.provenance.push_back(std::move(r));
      continue;
    }

    const Rational floor_value = c.lower ? std::max(*c.lower, lo.value) : lo.value;
    r.feas = c.rhs - floor_value;
    BigInt range;
    if (is_integer(r.feas)) {
      range = boost::multiprecision::numerator(r.feas);
    } else {
      range = ceil(r.feas);
      r.warnings.push_back("feas = " + r.feas.str() +
                           " is not integral; slack sized to its ceiling, so boundary points may keep a "
                           "positive penalty");
    }
    r.slack_bits = bits_for_range(range);

    Polynomial residual = c.lhs - Polynomial(c.rhs);
    Rational coefficient = 1;
    for (std::uint32_t j = 1; j <= r.slack_bits; ++j) {
      VarId s = VarId::slack(fresh_name(static_cast<std::uint32_t>(r.index), j), static_cast<std::uint32_t>(r.index), j);
      residual += coefficient * Polynomial::variable(s);
      r.slack_vars.push_back(s);
      r.slack_coefficients.push_back(coefficient);
      out.variables.push_back(std::move(s));
      coefficient *= 2;
    }
    r.residual = residual;
    r.penalty_poly = c.penalty_weight * square(residual);
    out.objective += r.penalty_poly;
    out.provenance.push_back(std::move(r));
  }

  out.constant_offset = out.objective.constant();
  return out;
}

namespace {

BigInt lcm(const BigInt& a, const BigInt& b) { return a / boost::multiprecision::gcd(a, b) * b; }

BigInt common_denominator(std::initializer_list<const Polynomial*> polys) {
  BigInt d = 1;
  for (const auto* p : polys)
    for (const auto& [support, c] : p->terms()) d = lcm(d, boost::multiprecision::denominator(c));
  return d;
}

Assignment to_assignment(std::uint64_t bits, const std::vector<VarId>& vars) {
  Assignment a;
  for (std::size_t i = 0; i < vars.size(); ++i) a.emplace(vars[i], ((bits >> i) & 1U) != 0);
  return a;
}

/// Shared enumeration over either exact integers or rationals.
template <class Value, class ObjectiveFn, class CostFn>
void enumerate_projection(std::size_t n_original, std::size_t n_slack, ObjectiveFn pubo_value, CostFn cost,
                          const std::vector<char>& feasible, PenaltyVerification& out,
                          const Rational& scale_back) {
  const std::uint64_t originals = std::uint64_t{1} << n_original;
  const std::uint64_t slacks = std::uint64_t{1} << n_slack;
  std::vector<Value> projected(originals);
  for (std::uint64_t x = 0; x < originals; ++x) {
    Value best = pubo_value(x);
    for (std::uint64_t s = 1; s < slacks; ++s) {
      Value v = pubo_value(x | (s << n_original));
      if (v < best) best = std::move(v);
    }
    projected[x] = std::move(best);
  }

  Value pubo_min = projected[0];
  for (const auto& v : projected)
    if (v < pubo_min) pubo_min = v;
  std::optional<Value> constrained_min;
  for (std::uint64_t x = 0; x < originals; ++x) {
    if (!feasible[x]) continue;
    Value c = cost(x);
    if (projected[x] != c) ++out.incomplete_slack_points;
    if (!constrained_min || c < *constrained_min) constrained_min = c;
  }
  for (std::uint64_t x = 0; x < originals; ++x) {
    if (projected[x] == pubo_min) out.pubo_argmin.push_back(x);
    if (constrained_min && feasible[x] && cost(x) == *constrained_min) out.constrained_argmin.push_back(x);
  }
  out.pubo_minimum = Rational(pubo_min) * scale_back;
  if (constrained_min) out.constrained_minimum = Rational(*constrained_min) * scale_back;
}

}  // namespace

PenaltyVerification verify_penalty(const Pubo& pubo, const Problem& original, std::size_t var_limit) {
  const std::vector<VarId> originals = original.variables;
  const std::vector<VarId> slacks = pubo.slack_variables();
  const std::size_t total = originals.size() + slacks.size();
  if (total > std::min(var_limit, kHardEnumerationLimit)) {
    throw Error(ErrorKind::invalid_input, "verification needs " + std::to_string(total) +
                                              " variables, above the limit of " +
                                              std::to_string(std::min(var_limit, kHardEnumerationLimit)));
  }
  std::vector<VarId> order = originals;
  order.insert(order.end(), slacks.begin(), slacks.end());

  PenaltyVerification out;
  out.variables = total;

  const Polynomial cost = original.normalized_objective();
  const BigInt d = common_denominator({&pubo.objective, &cost});
  const PackedPolynomial packed_pubo(pubo.objective * Rational(d), order);
  const PackedPolynomial packed_cost(cost * Rational(d), originals);

  const std::uint64_t n_points = std::uint64_t{1} << originals.size();
  std::vector<char> feasible(n_points, 1);
  for (const auto& c : original.constraints) {
    const PackedPolynomial lhs(c.lhs, originals);
    for (std::uint64_t x = 0; x < n_points; ++x) {
      if (!feasible[x]) continue;
      const Rational v = lhs.value(x);
      if (v > c.rhs || (c.lower && v < *c.lower)) feasible[x] = 0;
    }
  }

  const Rational scale_back(BigInt(1), d);
  if (packed_pubo.fits_int64() && packed_cost.fits_int64()) {
    enumerate_projection<std::int64_t>(
        originals.size(), slacks.size(), [&](std::uint64_t z) { return packed_pubo.scaled_value(z); },
        [&](std::uint64_t x) { return packed_cost.scaled_value(x); }, feasible, out, scale_back);
  } else {
    enumerate_projection<Rational>(
        originals.size(), slacks.size(), [&](std::uint64_t z) { return packed_pubo.value(z); },
        [&](std::uint64_t x) { return packed_cost.value(x); }, feasible, out, scale_back);
  }

  out.passed = out.pubo_argmin == out.constrained_argmin && out.incomplete_slack_points == 0;
  if (out.pubo_argmin != out.constrained_argmin) {
    std::vector<std::uint64_t> diff;
    std::set_symmetric_difference(out.pubo_argmin.begin(), out.pubo_argmin.end(), out.constrained_argmin.begin(),
                                  out.constrained_argmin.end(), std::back_inserter(diff));
    if (!diff.empty()) out.counterexample = to_assignment(diff.front(), originals);
    out.message = out.constrained_minimum ? "argmin sets differ" : "constrained problem has no feasible point";
  } else if (out.incomplete_slack_points > 0) {
    out.message = std::to_string(out.incomplete_slack_points) +
                  " feasible points cannot reach zero penalty with any slack setting";
  } else {
    out.message = "argmin sets agree (" + std::to_string(out.pubo_argmin.size()) + " optimal points)";
  }
  return out;
}

std::vector<TermDifference> diff_expansion(const Polynomial& expected, const Polynomial& actual) {
  std::set<Support> supports;
  for (const auto& [s, c] : expected.terms()) supports.insert(s);
  for (const auto& [s, c] : actual.terms()) supports.insert(s);
  std::vector<TermDifference> out;
  for (const auto& s : supports) {
    Rational e = expected.coefficient(s);
    Rational a = actual.coefficient(s);
    if (e != a) out.push_back(TermDifference{s, std::move(e), std::move(a)});
  }
  return out;
}

}  // namespace qaoadepth
