// Acceptance suite: one PASS/FAIL line per criterion.
#include "oracles.hpp"
#include "qaoadepth/error.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

using namespace qaoadepth;
using namespace oracle;

namespace {

std::filesystem::path g_data = "data";

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Detail {
 public:
  template <class T>
  Detail& operator<<(const T& v) {
    out_ << v;
    return *this;
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string names_of(const Support& s) {
  std::string out;
  for (const auto& v : s) out += (out.empty() ? "" : "*") + v.name;
  return out.empty() ? "1" : out;
}

/// Multilinear coefficients of f from its values on the cube (Moebius
/// inversion), independent of the polynomial multiplication code.
Polynomial interpolate(const std::vector<VarId>& vars, const std::function<Rational(const Assignment&)>& f) {
  const std::size_t n = vars.size();
  std::vector<Rational> coeff(std::size_t{1} << n);
  for (std::uint64_t z = 0; z < coeff.size(); ++z) coeff[z] = f(assign(vars, z));
  for (std::size_t b = 0; b < n; ++b)
    for (std::uint64_t z = 0; z < coeff.size(); ++z)
      if (z >> b & 1U) coeff[z] -= coeff[z ^ (std::uint64_t{1} << b)];
  Polynomial p;
  for (std::uint64_t z = 0; z < coeff.size(); ++z) {
    Support s;
    for (std::size_t i = 0; i < n; ++i)
      if (z >> i & 1U) s.push_back(vars[i]);
    p.add_term(std::move(s), coeff[z]);
  }
  return p;
}

Problem general_problem() { return read_problem(g_data / "general.json"); }

// 1. W6 MaxCut fixture.
Outcome criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const InstanceGraph g = read_graph(g_data / "w6.dimacs");
  const auto r = run_pipeline(make_maxcut(g), {});
  const double secs = seconds_since(t0);
  const bool ok = r.hypergraph.vertices.size() == 6 && r.hypergraph.edges.size() == 10 && r.coloring.optimal &&
                  r.coloring.size() == 5 && r.report.structural_depth == 7 && secs < 1.0;
  Detail d;
  d << r.hypergraph.vertices.size() << " vertices, " << r.hypergraph.edges.size() << " edges, chi' = "
    << r.coloring.size() << (r.coloring.optimal ? " (optimal)" : " (not proven)") << ", structural depth "
    << r.report.structural_depth << " = " << r.report.coloring_depth << " cost + " << r.report.singleton_overhead
    << " singleton + 1 mixer, " << secs << " s";
  return {ok, d.str()};
}

// 2. General example.
Outcome criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  const Problem p = general_problem();
  PipelineConfig config;
  config.gate_width = 3;
  const auto r = run_pipeline(p, config);
  const auto& c = r.pubo.provenance.at(0);

  bool ok = c.feas == 3 && c.slack_bits == 2 && c.slack_coefficients == std::vector<Rational>{1, 2};

  std::set<std::set<std::string>> expected_edges{
      {"x1", "x2", "x3"}, {"x1", "x2", "d1_1"}, {"x1", "x2", "d1_2"}, {"x1", "x3", "d1_1"},
      {"x1", "x3", "d1_2"}, {"x2", "x3", "d1_1"}, {"x2", "x3", "d1_2"}, {"d1_1", "d1_2"}};
  std::set<std::set<std::string>> got;
  for (const auto& e : r.hypergraph.edges) {
    std::set<std::string> s;
    for (const auto& v : e.support) s.insert(v.name);
    got.insert(s);
  }
  ok = ok && got == expected_edges && r.hypergraph.edges.size() == 8;
  ok = ok && r.coloring.size() == 7 && r.coloring.optimal;

  // Expansion oracle: interpolate the squared residual from its values.
  const std::vector<VarId> vars = r.pubo.variables;
  const auto lhs = p.constraints[0].lhs;
  const VarId d1 = c.slack_vars[0];
  const VarId d2 = c.slack_vars[1];
  auto residual = [&](int sign) {
    return [&, sign](const Assignment& a) {
      const Rational s = Rational(a.at(d1) ? 1 : 0) + Rational(a.at(d2) ? 2 : 0);
      const Rational v = eval(lhs, a) + sign * s - 3;
      return v * v;
    };
  };
  const Polynomial plus_form = interpolate(vars, residual(+1));
  const Polynomial minus_form = interpolate(vars, residual(-1));
  ok = ok && plus_form * c.penalty_weight == c.penalty_poly;

  // Printed expansion, written with the opposite slack sign.
  Problem ref;
  for (const auto& v : vars) ref.variables.push_back(VarId::original(v.name));
  Json wrapped{{"variables", Json::array()}, {"objective", read_json_file(g_data / "general_printed_penalty.json")}};
  for (const auto& v : vars) wrapped["variables"].push_back(v.name);
  const Polynomial printed_named = problem_from_json(wrapped).objective;
  Polynomial printed;
  for (const auto& [support, coeff] : printed_named.terms()) {
    Support s;
    for (const auto& v : support) {
      const auto it = std::find_if(vars.begin(), vars.end(), [&](const VarId& w) { return w.name == v.name; });
      s.push_back(*it);
    }
    printed.add_term(std::move(s), coeff);
  }
  const auto diff = diff_expansion(minus_form, printed);
  const Support missing{x(1), x(3), d2};
  const Support linear{d1};
  bool flags_missing = false;
  bool flags_sign = false;
  for (const auto& t : diff) {
    if (t.support == missing && t.expected == -8 && t.actual == 0) flags_missing = true;
    if (t.support == linear && t.expected == 7 && t.actual == -7) flags_sign = true;
  }
  ok = ok && flags_missing && flags_sign && diff.size() == 2;
  const auto against_ours = diff_expansion(plus_form, printed);
  bool ours_flags_missing = false;
  for (const auto& t : against_ours)
    if (t.support == missing && t.actual == 0) ours_flags_missing = true;
  ok = ok && ours_flags_missing;

  const double secs = seconds_since(t0);
  ok = ok && secs < 1.0;
  Detail d;
  d << "feas " << to_string(c.feas) << ", " << c.slack_bits << " slack bits (1, 2), " << r.hypergraph.edges.size()
    << " hyperedges, " << r.coloring.size() << " colors; printed expansion differs from the oracle in "
    << diff.size() << " terms:";
  for (const auto& t : diff)
    d << " " << names_of(t.support) << " (oracle " << to_string(t.expected) << ", printed " << to_string(t.actual)
      << ")";
  d << "; " << secs << " s";
  return {ok, d.str()};
}

// 3. Star graphs.
Outcome criterion3() {
  bool ok = true;
  Detail d;
  for (std::size_t m = 3; m <= 9; ++m) {
    const auto r = run_pipeline(make_maxcut(star_graph(m)), {});
    const bool classes_ok = r.coloring.size() == m;
    const bool depth_ok = r.report.structural_depth == m + 1;
    ok = ok && classes_ok && depth_ok;
    d << " m=" << m << ":" << r.coloring.size() << "c/" << r.report.structural_depth << "d";
  }
  d << " (expected m classes and depth m+1; the hub term has no idle cost layer)";
  return {ok, "classes/depth" + d.str()};
}

// 4. Vizing property on random graphs.
Outcome criterion4() {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> vertices(2, 10);
  std::uniform_real_distribution<double> density(0.15, 0.9);
  std::size_t violations = 0;
  std::size_t class2 = 0;
  std::size_t tested = 0;
  while (tested < 200) {
    const InstanceGraph g = random_graph(rng, vertices(rng), density(rng));
    if (g.edges.empty()) continue;
    ++tested;
    const auto h = build(dualize(make_maxcut(g)));
    const std::size_t delta = h.max_degree();
    const auto exact = color_exact(h);
    const auto mg = color_misra_gries(h);
    if (!exact || !proper(h, *exact) || exact->size() < delta || exact->size() > delta + 1) ++violations;
    if (exact && exact->size() == delta + 1) ++class2;
    if (!proper(h, mg) || mg.size() > delta + 1) ++violations;
  }
  Detail d;
  d << tested << " graphs, " << violations << " violations, " << class2 << " of class two";
  return {violations == 0, d.str()};
}

// 5. Dualization oracle.
Outcome criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(99);
  std::size_t instances = 0;
  std::size_t counterexamples = 0;
  std::size_t oracle_mismatch = 0;
  std::size_t too_big = 0;
  auto check = [&](const Problem& p) {
    const Pubo pubo = dualize(p);
    if (pubo.variables.size() > 16) {
      ++too_big;
      return;
    }
    ++instances;
    const auto v = verify_penalty(pubo, p, 16);
    if (!v.passed) ++counterexamples;
    // Independent enumeration by term-wise evaluation.
    const auto direct = constrained_optimum(p);
    const auto projected = pubo_optimum(pubo, p);
    if (direct.argmin != projected.argmin || direct.value != projected.value) ++oracle_mismatch;
  };

  for (int t = 0; t < 25; ++t) {
    std::uniform_int_distribution<std::size_t> n(2, 10);
    check(make_maxindset(random_graph(rng, n(rng), 0.4)));
  }
  for (int t = 0; t < 25; ++t) {
    std::uniform_int_distribution<std::size_t> n(2, 6);
    InstanceGraph g = random_graph(rng, n(rng), 0.5);
    while (g.n + g.edges.size() > 16) g.edges.pop_back();
    check(make_vertex_cover(g));
  }
  for (int t = 0; t < 25; ++t) {
    std::uniform_int_distribution<int> n(1, 6);
    std::uniform_int_distribution<int> w(1, 9);
    std::uniform_int_distribution<int> v(1, 9);
    const int items = n(rng);
    std::vector<Rational> weights, values;
    int total = 0;
    for (int i = 0; i < items; ++i) {
      weights.emplace_back(w(rng));
      values.emplace_back(v(rng));
      total += static_cast<int>(weights.back());
    }
    std::uniform_int_distribution<int> cap(1, total + 2);
    const int capacity = cap(rng);
    check(make_knapsack(values, weights, capacity, std::nullopt, t % 2 == 1));
  }
  for (int t = 0; t < 25; ++t) {
    std::uniform_int_distribution<int> atoms(1, 4);
    std::uniform_int_distribution<int> clauses(1, 3);
    std::uniform_int_distribution<int> width(1, 3);
    const int a = atoms(rng);
    std::vector<Clause> cnf;
    for (int c = clauses(rng); c > 0; --c) {
      std::set<int> used;
      Clause clause;
      for (int k = std::min(width(rng), a); k > 0; --k) {
        std::uniform_int_distribution<int> var(1, a);
        int v = var(rng);
        while (used.count(v)) v = var(rng);
        used.insert(v);
        clause.push_back(rng() % 2 ? v : -v);
      }
      cnf.push_back(clause);
    }
    check(make_sat(cnf));
  }
  const double secs = seconds_since(t0);
  Detail d;
  d << instances << " instances (" << too_big << " skipped above 16 variables), " << counterexamples
    << " counterexamples, " << oracle_mismatch << " disagreements with direct enumeration, " << secs << " s";
  return {counterexamples == 0 && oracle_mismatch == 0 && instances >= 80 && secs < 30.0, d.str()};
}

// 6. Schedule validity.
Outcome criterion6() {
  PipelineConfig narrow;
  PipelineConfig wide;
  wide.gate_width = 3;
  PipelineConfig wider;
  wider.gate_width = 4;
  PipelineConfig merged = wide;
  merged.merge = true;
  const std::vector<Rational> w{1, 2, 3};
  const std::vector<std::pair<std::string, PipelineResult>> fixtures{
      {"w6", run_pipeline(make_maxcut(read_graph(g_data / "w6.dimacs")), narrow)},
      {"general", run_pipeline(general_problem(), wide)},
      {"general-merged", run_pipeline(general_problem(), merged)},
      {"indset", run_pipeline(read_problem(g_data / "indset.json"), narrow)},
      {"star5", run_pipeline(make_maxcut(star_graph(5)), narrow)},
      {"knapsack", run_pipeline(make_knapsack(w, w, 4), narrow)},
      {"vertex-cover", run_pipeline(make_vertex_cover(wheel_graph(6)), narrow)},
      {"sat", run_pipeline(make_sat(read_cnf(g_data / "sat.cnf")), wider)},
      {"tsp", run_pipeline(make_tsp(complete_graph(4), {}), narrow)},
  };
  std::size_t passed = 0;
  std::string failures;
  for (const auto& [name, r] : fixtures) {
    if (check_equivalence(r.schedule, r.pubo).equivalent) {
      ++passed;
    } else {
      failures += " " + name;
    }
  }

  const auto& general = fixtures[1].second;
  auto dup = general.schedule;
  const Gate copy = dup.layers[0].gates[0];
  dup.layers[1].gates.push_back(copy);
  const auto dup_result = check_equivalence(dup, general.pubo);
  const bool dup_caught = !dup_result.equivalent && dup_result.first_mismatch &&
                          dup_result.delta == eval(copy.terms, *dup_result.first_mismatch);

  auto dropped = general.schedule;
  bool removed = false;
  for (auto& layer : dropped.layers) {
    std::erase_if(layer.gates, [&](const Gate& g) {
      const bool hit = g.support.size() == 2 && g.support[0].is_slack() && g.support[1].is_slack();
      removed = removed || hit;
      return hit;
    });
  }
  const bool drop_caught = removed && !check_equivalence(dropped, general.pubo).equivalent;

  Detail d;
  d << passed << "/" << fixtures.size() << " fixture schedules equivalent" << failures
    << "; duplicated gate " << (dup_caught ? "detected" : "MISSED") << "; dropped d1_1*d1_2 gate "
    << (drop_caught ? "detected" : "MISSED");
  return {passed == fixtures.size() && dup_caught && drop_caught, d.str()};
}

// 7. Knapsack slack accounting.
Outcome criterion7() {
  const auto k = knapsack_from_json(read_json_file(g_data / "knapsack.json"));
  const auto plain = dualize(make_knapsack(k.values, k.weights, k.capacity));
  const auto pre = dualize(make_knapsack(k.values, k.weights, k.capacity, std::nullopt, true));
  auto complete = [](const Pubo& pubo) {
    const auto h = absorb_subsets(build(pubo), GateWidthLimit(2));
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& e : h.edges)
      if (e.support.size() == 2) pairs.emplace(e.support[0].name, e.support[1].name);
    const auto& vars = pubo.variables;
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = i + 1; j < vars.size(); ++j)
        if (!pairs.count({vars[i].name, vars[j].name}) && !pairs.count({vars[j].name, vars[i].name})) return false;
    return h.vertices.size() == vars.size();
  };
  const bool ok = plain.slack_variables().size() == 3 && pre.slack_variables().size() == 2 && complete(plain) &&
                  complete(pre);
  Detail d;
  d << plain.slack_variables().size() << " slack bits without preprocessing, " << pre.slack_variables().size()
    << " with; derived graphs complete: " << (complete(plain) ? "yes" : "no") << "/"
    << (complete(pre) ? "yes" : "no");
  return {ok, d.str()};
}

// 8. Exact vs exhaustive coloring.
Outcome criterion8() {
  std::mt19937_64 rng(8);
  std::size_t mismatches = 0;
  for (int t = 0; t < 100; ++t) {
    const auto edges = random_hypergraph(rng, 8, 8, 4);
    const auto h = hypergraph_from_supports(names(edges));
    const auto c = color_exact(h);
    if (!c || !proper(h, *c) || c->size() != chromatic_index(edges)) ++mismatches;
  }
  Detail d;
  d << "100 hypergraphs, " << mismatches << " mismatches";
  return {mismatches == 0, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_data = argv[1];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"W6 MaxCut fixture", criterion1},
      {"general example", criterion2},
      {"star graphs K_{1,m}, m = 3..9", criterion3},
      {"Vizing property, 200 random graphs", criterion4},
      {"dualization oracle", criterion5},
      {"schedule validity and injected faults", criterion6},
      {"knapsack slack accounting", criterion7},
      {"exact vs exhaustive coloring", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << " (" << criteria[i].first
              << "): " << o.detail << std::endl;
    failed += o.pass ? 0 : 1;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
