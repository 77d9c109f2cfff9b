#include "oracles.hpp"
#include "qaoadepth/error.hpp"

#include <doctest.h>

using namespace qaoadepth;
using namespace oracle;

namespace {

Polynomial w6_maxcut() {
  Polynomial p;
  for (const auto& e : wheel_graph(6).edges) {
    const auto i = static_cast<int>(e.u);
    const auto j = static_cast<int>(e.v);
    p += C(2) * X(i) * X(j) - X(i) - X(j);
  }
  return p;
}

Polynomial random_poly(std::mt19937_64& rng, int vars, int terms) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> var(1, vars);
  std::uniform_int_distribution<int> width(0, 3);
  Polynomial p;
  for (int t = 0; t < terms; ++t) {
    Support s;
    const int k = width(rng);
    for (int i = 0; i < k; ++i) s.push_back(x(var(rng)));
    p.add_term(s, Rational(coeff(rng), 1 + (t % 3)));
  }
  return p;
}

}  // namespace

TEST_CASE("variable order puts originals in natural order before slacks") {
  CHECK(x(2) < x(10));
  CHECK(VarId::original("a") < VarId::original("b"));
  const auto s = VarId::slack("d1_1", 1, 1);
  CHECK(x(99) < s);
  CHECK(VarId::slack("d1_2", 1, 2) < VarId::slack("d2_1", 2, 1));
  CHECK(VarId::slack("d1_1", 1, 1) < VarId::slack("d1_2", 1, 2));
}

TEST_CASE("addition cancels and merges") {
  CHECK((X(1) + (-X(1))).is_zero());
  const Polynomial p = (C(2) * X(1) * X(2) - X(1)) + (-X(2));
  CHECK(p.size() == 3);
  CHECK(p.coefficient({x(1), x(2)}) == 2);
  CHECK(p.coefficient({x(1)}) == -1);
  CHECK(p.coefficient({x(2)}) == -1);
}

TEST_CASE("W6 MaxCut objective has sixteen terms") {
  const Polynomial p = w6_maxcut();
  CHECK(p.size() == 16);
  CHECK(p.coefficient({x(1)}) == -5);
  CHECK(p.coefficient({x(2)}) == -3);
  CHECK(p.coefficient({x(1), x(4)}) == 2);
  Assignment zero;
  for (int i = 1; i <= 6; ++i) zero[x(i)] = false;
  CHECK(evaluate(p, zero) == 0);
}

TEST_CASE("multiplication is idempotent on binary variables") {
  CHECK(X(1) * X(1) == X(1));
  CHECK((X(1) + X(2)) * (X(1) + X(2)) == X(1) + X(2) + C(2) * X(1) * X(2));
  const Polynomial p = X(1) * X(2) + X(2) * X(3) + C(2) * X(1) * X(3);
  const Polynomial sq = p * p;
  CHECK(sq == X(1) * X(2) + X(2) * X(3) + C(4) * X(1) * X(3) + C(10) * X(1) * X(2) * X(3));
  CHECK(sq.degree() == 3);
}

TEST_CASE("square examples") {
  CHECK(square(Polynomial()).is_zero());
  CHECK(square(X(1) - C(1)) == C(1) - X(1));
  CHECK(square(X(1) + C(2) * X(2) - C(3)) == C(-5) * X(1) - C(8) * X(2) + C(4) * X(1) * X(2) + C(9));
}

TEST_CASE("evaluate on MaxCut edge terms") {
  const Polynomial edge = C(2) * X(1) * X(2) - X(1) - X(2);
  CHECK(evaluate(edge, {{x(1), true}, {x(2), true}}) == 0);
  CHECK(evaluate(edge, {{x(1), true}, {x(2), false}}) == -1);
  CHECK_THROWS_AS(evaluate(edge, {{x(1), true}}), Error);
}

TEST_CASE("minimum_over_cube") {
  const Polynomial p = X(1) * X(2) + X(2) * X(3) + C(2) * X(1) * X(3);
  auto m = minimum_over_cube(p);
  CHECK(m.value == 0);
  CHECK(m.exact);
  CHECK(maximum_over_cube(p).value == 4);
  m = minimum_over_cube(C(2) * X(1) * X(2) - X(1) - X(2));
  CHECK(m.value == -1);
  CHECK(minimum_over_cube(C(5)).value == 5);
  CHECK(minimum_over_cube(C(5)).exact);

  // Beyond the limit: a sound bound, flagged inexact.
  const auto bound = minimum_over_cube(p, 2);
  CHECK_FALSE(bound.exact);
  CHECK(bound.value <= 0);
}

TEST_CASE("ring axioms hold pointwise on random polynomials") {
  std::mt19937_64 rng(7);
  const std::vector<VarId> vars{x(1), x(2), x(3), x(4)};
  for (int trial = 0; trial < 60; ++trial) {
    const Polynomial a = random_poly(rng, 4, 5);
    const Polynomial b = random_poly(rng, 4, 5);
    const Polynomial c = random_poly(rng, 4, 4);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(square(a) == a * a);
    for (std::uint64_t z = 0; z < 16; ++z) {
      const Assignment asg = assign(vars, z);
      CHECK(eval(a * b, asg) == eval(a, asg) * eval(b, asg));
      CHECK(eval(a - b, asg) == eval(a, asg) - eval(b, asg));
    }
  }
}

TEST_CASE("canonical form is idempotent") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial p = random_poly(rng, 5, 8);
    const auto once = canonicalize(p.monomials());
    CHECK(canonicalize(once.monomials()) == once);
    CHECK(once == p);
    for (const auto& [support, coeff] : p.terms()) {
      CHECK(coeff != 0);
      CHECK(std::is_sorted(support.begin(), support.end()));
      CHECK(std::adjacent_find(support.begin(), support.end()) == support.end());
    }
  }
}

TEST_CASE("packed evaluation agrees with term-wise evaluation") {
  std::mt19937_64 rng(3);
  const std::vector<VarId> vars{x(1), x(2), x(3), x(4), x(5)};
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial p = random_poly(rng, 5, 10);
    const PackedPolynomial packed(p, vars);
    CHECK(packed.fits_int64());
    for (std::uint64_t z = 0; z < 32; ++z) {
      const Rational expected = eval(p, assign(vars, z));
      CHECK(packed.value(z) == expected);
      CHECK(Rational(BigInt(packed.scaled_value(z)), packed.denominator()) == expected);
    }
  }
}

TEST_CASE("packed evaluation falls back when coefficients are huge") {
  BigInt big = 1;
  big <<= 80;
  const Polynomial p = Rational(big) * X(1) + X(2);
  const std::vector<VarId> vars{x(1), x(2)};
  const PackedPolynomial packed(p, vars);
  CHECK_FALSE(packed.fits_int64());
  CHECK(packed.value(3) == Rational(big) + 1);
}

TEST_CASE("to_string prints the constant last") {
  const Polynomial p = C(2) * X(1) * X(2) - X(1) + C(9);
  const std::string s = p.to_string();
  CHECK(s.find("x1") != std::string::npos);
  CHECK(s.substr(s.size() - 1) == "9");
  CHECK(Polynomial().to_string() == "0");
}
