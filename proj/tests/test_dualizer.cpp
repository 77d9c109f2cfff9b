#include "oracles.hpp"
#include "qaoadepth/error.hpp"

#include <doctest.h>

using namespace qaoadepth;
using namespace oracle;

namespace {

Problem general_example() {
  Problem p;
  p.sense = Sense::maximize;
  for (int i = 1; i <= 3; ++i) p.add_variable("x" + std::to_string(i));
  p.objective = X(1) + X(2) + X(3);
  Constraint c;
  c.lhs = X(1) * X(2) + X(2) * X(3) + C(2) * X(1) * X(3);
  c.rhs = 3;
  p.constraints.push_back(c);
  set_penalty_weight(p, default_penalty_weight(p.objective));
  return p;
}

/// Squared residual written out by hand from (p + d1 + 2 d2 - 3)^2.
Polynomial hand_expansion(const Pubo& pubo) {
  const auto d1 = Polynomial::variable(pubo.provenance[0].slack_vars[0]);
  const auto d2 = Polynomial::variable(pubo.provenance[0].slack_vars[1]);
  const Polynomial x1 = X(1), x2 = X(2), x3 = X(3);
  return C(10) * x1 * x2 * x3 - C(5) * x1 * x2 - C(5) * x2 * x3 - C(8) * x1 * x3 + C(2) * d1 * x1 * x2 +
         C(2) * d1 * x2 * x3 + C(4) * d1 * x1 * x3 + C(4) * d2 * x1 * x2 + C(4) * d2 * x2 * x3 +
         C(8) * d2 * x1 * x3 + C(4) * d1 * d2 - C(5) * d1 - C(8) * d2 + C(9);
}

void check_slack_completeness(const Problem& p, const Pubo& pubo) {
  const auto originals = p.variables;
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    const auto& c = p.constraints[i];
    const auto& r = pubo.provenance[i];
    if (r.dropped) continue;
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << originals.size()); ++z) {
      Assignment a = assign(originals, z);
      const Rational lhs = eval(c.lhs, a);
      const bool feasible = lhs <= c.rhs && (!c.lower || lhs >= *c.lower);
      std::optional<Rational> best;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << r.slack_vars.size()); ++s) {
        for (std::size_t j = 0; j < r.slack_vars.size(); ++j) a[r.slack_vars[j]] = (s >> j) & 1U;
        const Rational v = eval(r.penalty_poly, a);
        if (!best || v < *best) best = v;
      }
      if (feasible) {
        CHECK(*best == 0);
      } else if (lhs > c.rhs && is_integer(lhs - c.rhs)) {
        CHECK(*best >= r.penalty_weight);
      }
    }
  }
}

}  // namespace

TEST_CASE("general example: feas 3, two slack bits with coefficients 1 and 2") {
  const Problem p = general_example();
  const Pubo pubo = dualize(p);
  REQUIRE(pubo.provenance.size() == 1);
  const auto& r = pubo.provenance[0];
  CHECK(r.min_lhs == 0);
  CHECK(r.min_exact);
  CHECK(r.feas == 3);
  CHECK(r.slack_bits == 2);
  CHECK(r.slack_coefficients == std::vector<Rational>{1, 2});
  CHECK(r.slack_vars[0].name == "d1_1");
  CHECK(r.slack_vars[1].name == "d1_2");
  CHECK(r.penalty_weight == 4);
  CHECK(pubo.negated);
  CHECK(pubo.variables.size() == 5);
}

TEST_CASE("general example penalty matches an independent expansion") {
  const Problem p = general_example();
  const Pubo pubo = dualize(p);
  const auto& r = pubo.provenance[0];
  CHECK(r.penalty_poly == Rational(4) * hand_expansion(pubo));
  CHECK(diff_expansion(Rational(4) * hand_expansion(pubo), r.penalty_poly).empty());

  // Pointwise against the residual squared, over all 32 assignments.
  std::vector<VarId> vars = pubo.variables;
  for (std::uint64_t z = 0; z < 32; ++z) {
    const Assignment a = assign(vars, z);
    const Rational res = eval(r.residual, a);
    CHECK(eval(r.penalty_poly, a) == 4 * res * res);
  }
}

TEST_CASE("diff_expansion lists every disagreeing term") {
  const Polynomial a = C(2) * X(1) * X(2) + X(3) + C(1);
  const Polynomial b = C(2) * X(1) * X(2) - X(3) + X(4);
  const auto diff = diff_expansion(a, b);
  REQUIRE(diff.size() == 3);
  CHECK(diff[0].support.empty());
  CHECK(diff[0].expected == 1);
  CHECK(diff[0].actual == 0);
}

TEST_CASE("MaxIndSet constraints need no slack") {
  const Problem p = make_maxindset(wheel_graph(6), Rational(2));
  const Pubo pubo = dualize(p);
  for (const auto& r : pubo.provenance) {
    CHECK(r.feas == 0);
    CHECK(r.slack_bits == 0);
  }
  CHECK(pubo.slack_variables().empty());
  // -sum x + 2 sum_{edges} x_i x_j
  Polynomial expected = -(X(1) + X(2) + X(3) + X(4) + X(5) + X(6));
  for (const auto& e : wheel_graph(6).edges) expected += C(2) * X(static_cast<int>(e.u)) * X(static_cast<int>(e.v));
  CHECK(pubo.objective == expected);
}

TEST_CASE("vertex cover edge: one slack bit, zero penalty exactly on covers") {
  const Problem p = make_vertex_cover(path_graph(2), Rational(3));
  const Pubo pubo = dualize(p);
  const auto& r = pubo.provenance[0];
  CHECK(r.feas == 1);
  CHECK(r.slack_bits == 1);
  const auto d = Polynomial::variable(r.slack_vars[0]);
  CHECK(r.residual == C(1) - X(1) - X(2) + d);
  for (int a1 = 0; a1 < 2; ++a1)
    for (int a2 = 0; a2 < 2; ++a2) {
      Rational best = -1;
      for (int s = 0; s < 2; ++s) {
        const Rational v = eval(r.penalty_poly, {{x(1), a1 == 1}, {x(2), a2 == 1}, {r.slack_vars[0], s == 1}});
        if (best < 0 || v < best) best = v;
      }
      CHECK((best == 0) == (a1 + a2 >= 1));
    }
}

TEST_CASE("knapsack slack counts with and without preprocessing") {
  const std::vector<Rational> w{1, 2, 3};
  CHECK(dualize(make_knapsack(w, w, 4)).slack_variables().size() == 3);
  CHECK(dualize(make_knapsack(w, w, 4, std::nullopt, true)).slack_variables().size() == 2);
}

TEST_CASE("redundant constraints are dropped and infeasible ones rejected") {
  Problem p;
  p.add_variable("x1");
  p.add_variable("x2");
  p.constraints.push_back(Constraint{X(1) + X(2), 5, 1, std::nullopt, "loose"});
  const Pubo pubo = dualize(p);
  CHECK(pubo.provenance[0].dropped);
  CHECK(pubo.objective.is_zero());

  p.constraints = {Constraint{X(1) + X(2), -1, 1, std::nullopt, "tight"}};
  try {
    dualize(p);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::infeasible_constraint);
    CHECK(e.exit_code() == 2);
  }
}

TEST_CASE("slack names avoid collisions with problem variables") {
  Problem p;
  p.add_variable("x1");
  p.add_variable("d1_1");
  p.constraints.push_back(Constraint{X(1) + Polynomial::variable(VarId::original("d1_1")), 1, 1, std::nullopt, ""});
  const Pubo pubo = dualize(p);
  REQUIRE(pubo.provenance[0].slack_vars.size() == 1);
  CHECK(pubo.provenance[0].slack_vars[0].name == "_d1_1");
}

TEST_CASE("dualize is deterministic and slack registers are private") {
  const Problem p = make_sat({{1, 2, -3}, {-1, 3}, {2, 3}});
  const Pubo a = dualize(p);
  const Pubo b = dualize(p);
  CHECK(a.objective == b.objective);
  CHECK(a.variables == b.variables);
  std::set<VarId> seen;
  for (const auto& r : a.provenance) {
    for (const auto& s : r.slack_vars) CHECK(seen.insert(s).second);
    for (const auto& other : a.provenance) {
      if (&other == &r) continue;
      for (const auto& v : other.penalty_poly.variables())
        if (v.is_slack()) CHECK(std::find(r.slack_vars.begin(), r.slack_vars.end(), v) == r.slack_vars.end());
    }
  }
}

TEST_CASE("slack coefficients cover 0..feas") {
  for (int feas = 0; feas <= 40; ++feas) {
    const auto k = bits_for_range(feas);
    std::set<int> reachable;
    for (int s = 0; s < (1 << k); ++s) reachable.insert(s);
    for (int t = 0; t <= feas; ++t) CHECK(reachable.count(t));
  }
}

TEST_CASE("slack completeness on generated families") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 6; ++trial) {
    const InstanceGraph g = random_graph(rng, 5, 0.5);
    const Problem vc = make_vertex_cover(g);
    check_slack_completeness(vc, dualize(vc));
    const Problem mis = make_maxindset(g);
    check_slack_completeness(mis, dualize(mis));
  }
  const Problem sat = make_sat({{1, 2, -3}, {-1, 3}});
  check_slack_completeness(sat, dualize(sat));
  const std::vector<Rational> w{2, 3, 4};
  const Problem ks = make_knapsack(w, w, 6);
  check_slack_completeness(ks, dualize(ks));
}

TEST_CASE("verify_penalty agrees with a direct constrained optimum") {
  SUBCASE("W6 MaxIndSet with lambda 2") {
    const Problem p = make_maxindset(wheel_graph(6), Rational(2));
    const Pubo pubo = dualize(p);
    const auto v = verify_penalty(pubo, p);
    CHECK(v.passed);
    const auto direct = constrained_optimum(p);
    CHECK(std::set<std::uint64_t>(v.constrained_argmin.begin(), v.constrained_argmin.end()) == direct.argmin);
    CHECK(direct.argmin.size() == 5);
    for (auto z : direct.argmin) CHECK(__builtin_popcountll(z) == 2);
    CHECK(pubo_optimum(pubo, p).argmin == direct.argmin);
  }
  SUBCASE("knapsack picks items 1 and 3") {
    const std::vector<Rational> w{1, 2, 3};
    const Problem p = make_knapsack(w, w, 4);
    const Pubo pubo = dualize(p);
    const auto v = verify_penalty(pubo, p);
    CHECK(v.passed);
    CHECK(v.pubo_argmin == std::vector<std::uint64_t>{0b101});
    CHECK(*v.constrained_minimum == -4);
  }
  SUBCASE("MaxCut has nothing to penalize") {
    const Problem p = make_maxcut(wheel_graph(6));
    const Pubo pubo = dualize(p);
    CHECK(pubo.objective == p.objective);
    CHECK(verify_penalty(pubo, p).passed);
  }
}

TEST_CASE("verify_penalty catches a penalty that is too weak") {
  const Problem p = make_maxindset(complete_graph(3), Rational(1, 2));
  const Pubo pubo = dualize(p);
  const auto v = verify_penalty(pubo, p);
  CHECK_FALSE(v.passed);
  CHECK(v.counterexample.has_value());
}

TEST_CASE("verify_penalty refuses large instances") {
  const Problem p = make_maxcut(complete_graph(22));
  CHECK_THROWS_AS(verify_penalty(dualize(p), p), Error);
}
