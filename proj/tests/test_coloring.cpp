#include "oracles.hpp"
#include "qaoadepth/error.hpp"

#include <doctest.h>

using namespace qaoadepth;
using namespace oracle;

namespace {

DerivedHypergraph graph_h(const InstanceGraph& g) { return hypergraph_from_supports(names(edge_lists(g))); }

const BoundNote* find_bound(const ColoringBounds& b, const std::string& name) {
  for (const auto& u : b.uppers)
    if (u.name == name) return &u;
  return nullptr;
}

}  // namespace

TEST_CASE("exact chromatic index of fixtures") {
  auto w6 = color_exact(graph_h(wheel_graph(6)));
  REQUIRE(w6);
  CHECK(w6->size() == 5);
  CHECK(w6->optimal);
  CHECK(proper(graph_h(wheel_graph(6)), *w6));
  for (std::size_t m = 3; m <= 9; ++m) {
    auto star = color_exact(graph_h(star_graph(m)));
    REQUIRE(star);
    CHECK(star->size() == m);
  }
  CHECK(color_exact(graph_h(complete_graph(4)))->size() == 3);
  CHECK(color_exact(graph_h(complete_graph(5)))->size() == 5);
  CHECK(color_exact(graph_h(cycle_graph(5)))->size() == 3);
  CHECK(color_exact(DerivedHypergraph{})->size() == 0);
}

TEST_CASE("Petersen graph is class two") {
  const InstanceGraph g = petersen();
  g.validate();
  const auto c = color_exact(graph_h(g));
  REQUIRE(c);
  CHECK(c->size() == 4);
}

TEST_CASE("Misra-Gries colors properly with at most max degree + 1") {
  CHECK(color_misra_gries(graph_h(cycle_graph(6))).size() <= 3);
  const auto w6 = graph_h(wheel_graph(6));
  const auto mg = color_misra_gries(w6);
  CHECK(proper(w6, mg));
  CHECK(mg.size() <= 6);
  CHECK(mg.size() >= 5);
  const auto k4 = color_misra_gries(graph_h(complete_graph(4)));
  CHECK(k4.size() <= 4);
  CHECK_THROWS_AS(color_misra_gries(hypergraph_from_supports({{"x1", "x2", "x3"}})), Error);

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const InstanceGraph g = random_graph(rng, 12, 0.4);
    if (g.edges.empty()) continue;
    const auto h = graph_h(g);
    const auto c = color_misra_gries(h);
    CHECK(proper(h, c));
    CHECK(c.size() <= max_degree(g) + 1);
  }
}

TEST_CASE("greedy coloring") {
  const auto matching = hypergraph_from_supports({{"x1", "x2"}, {"x3", "x4"}, {"x5", "x6"}});
  CHECK(color_greedy(matching).size() == 1);
  for (auto order : {GreedyOrder::degree_desc, GreedyOrder::input})
    CHECK(color_greedy(graph_h(star_graph(4)), order).size() == 4);
  const auto h = hypergraph_from_supports({{"x1", "x2"}, {"x2", "x3"}, {"x3", "x4"}});
  const auto c = color_greedy(h, GreedyOrder::input);
  CHECK(c.classes == std::vector<std::vector<std::size_t>>{{0, 2}, {1}});
}

TEST_CASE("complete graphs: chi' = m - 1 for even m, m for odd") {
  for (std::size_t m = 2; m <= 8; ++m) {
    const auto c = color_exact(graph_h(complete_graph(m)));
    REQUIRE(c);
    CHECK(c->size() == (m % 2 == 0 ? m - 1 : m));
  }
}

TEST_CASE("exact agrees with set-partition enumeration on random hypergraphs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const auto edges = random_hypergraph(rng, 7, 8, 4);
    const auto h = hypergraph_from_supports(names(edges));
    const auto c = color_exact(h);
    REQUIRE(c);
    CHECK(proper(h, *c));
    CHECK(c->size() == chromatic_index(edges));
    CHECK(c->size() <= color_greedy(h).size());
    CHECK(c->lower_bound <= c->size());
  }
}

TEST_CASE("exact coloring of graphs satisfies Vizing") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 80; ++trial) {
    const InstanceGraph g = random_graph(rng, 8, 0.5);
    if (g.edges.empty()) continue;
    const auto h = graph_h(g);
    const auto c = color_exact(h);
    REQUIRE(c);
    const std::size_t delta = max_degree(g);
    CHECK(c->size() >= delta);
    CHECK(c->size() <= delta + 1);
    CHECK(c->size() <= color_misra_gries(h).size());
  }
}

TEST_CASE("budget exhaustion returns nothing") {
  // Petersen needs 4 colors but every lower bound says 3.
  const auto h = graph_h(petersen());
  CHECK_FALSE(color_exact(h, 1).has_value());
}

TEST_CASE("bounds") {
  const auto w6 = bounds(graph_h(wheel_graph(6)));
  CHECK(w6.lower == 5);
  const auto* vizing = find_bound(w6, "Vizing");
  REQUIRE(vizing);
  CHECK(vizing->applicable);
  CHECK(vizing->value == 6);
  CHECK(w6.best_upper() == 6);

  const auto single = bounds(hypergraph_from_supports({{"x1", "x2", "x3"}}));
  CHECK(single.lower == 1);
  CHECK(single.best_upper() == 1);

  const auto linear = bounds(hypergraph_from_supports({{"x1", "x2", "x3"}, {"x3", "x4", "x5"}, {"x5", "x6", "x1"}}));
  const auto* efl = find_bound(linear, "Erdos-Faber-Lovasz");
  REQUIRE(efl);
  CHECK(efl->applicable);
  CHECK(efl->value == 6);
  const auto* cl = find_bound(linear, "Chang-Lawler");
  REQUIRE(cl);
  CHECK(cl->status == "theorem");
  CHECK(cl->value == 7);
}

TEST_CASE("check_coloring rejects overlaps and omissions") {
  const auto h = graph_h(path_graph(3));
  EdgeColoring bad;
  bad.classes = {{0, 1}};
  CHECK_FALSE(check_coloring(h, bad).ok);
  bad.classes = {{0}};
  CHECK_FALSE(check_coloring(h, bad).ok);
  bad.classes = {{0}, {1}, {1}};
  CHECK_FALSE(check_coloring(h, bad).ok);
  bad.classes = {{0}, {1}};
  CHECK(check_coloring(h, bad).ok);
}
