#pragma once

#include "qaoadepth/merge.hpp"
#include "qaoadepth/phase_sim.hpp"
#include "qaoadepth/scheduler.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace qaoadepth {

using Json = nlohmann::ordered_json;

/// {"num": n, "den": d}; integers beyond 64 bits are written as strings.
Json to_json(const Rational& value);
/// Accepts an integer, a number, a string such as "-3/4" or {"num", "den"}.
/// `where` prefixes error messages.
Rational rational_from_json(const Json& j, const std::string& where);

/// [{"vars": [...], "coeff": ...}] in canonical term order.
Json to_json(const Polynomial& p);
Json to_json(const VarId& v);
Json to_json(const Support& s);

/// Schema:
///   {"sense": "minimize"|"maximize", "variables": [names],
///    "objective": [{"vars": [...], "coeff": c}],
///    "constraints": [{"terms": [...], "rhs": r, "lambda"?: w, "lower"?: l,
///                     "label"?: s}]}
/// Terms are canonicalized, so a written problem may list them in a
/// different order than the file it was read from.
Problem problem_from_json(const Json& j);
Json problem_to_json(const Problem& problem);
Problem read_problem(const std::filesystem::path& path);
void write_problem(const Problem& problem, const std::filesystem::path& path);

/// DIMACS edge format: "c" comments, one "p edge n m" line, "e u v [w]".
InstanceGraph parse_dimacs_graph(std::istream& in, const std::string& source = "<input>");
/// {"n": n, "edges": [[u, v], [u, v, w], ...]}
InstanceGraph graph_from_json(const Json& j);
/// DIMACS when the file does not start with '{', JSON otherwise.
InstanceGraph read_graph(const std::filesystem::path& path);

/// DIMACS CNF: "p cnf vars clauses", clauses terminated by 0.
std::vector<Clause> parse_cnf(std::istream& in, const std::string& source = "<input>");
std::vector<Clause> read_cnf(const std::filesystem::path& path);

struct KnapsackInstance {
  std::vector<Rational> values;
  std::vector<Rational> weights;
  Rational capacity;
};
/// {"values": [...], "weights": [...], "capacity": W}
KnapsackInstance knapsack_from_json(const Json& j);

struct TspInstance {
  InstanceGraph graph;
  std::vector<std::vector<std::size_t>> subtours;
};
/// {"n": n, "edges": [...], "subtours": [[vertices], ...]}
TspInstance tsp_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);

Json to_json(const ConstraintReport& r);
Json to_json(const DualizationReport& r);
Json to_json(const Pubo& pubo);
Json hypergraph_summary(const DerivedHypergraph& h);
Json to_json(const BoundNote& b);
Json to_json(const EdgeColoring& c, const DerivedHypergraph& h);
Json to_json(const CircuitSchedule& s);
Json to_json(const FormulaCheck& c);
Json to_json(const DepthReport& r);
Json to_json(const PenaltyVerification& v, const Pubo& pubo);
Json to_json(const EquivalenceResult& e);
Json to_json(const std::vector<TermDifference>& diff);

/// Graphviz rendering; hyperedges wider than two become square nodes joined
/// to their members. Edges are labelled with their color when one is given.
std::string to_dot(const DerivedHypergraph& h, const EdgeColoring* coloring = nullptr);

/// One column per layer, one row per qubit.
std::string circuit_sketch(const CircuitSchedule& s, bool ansi);
/// False when NO_COLOR is set or stdout is not a terminal.
bool ansi_enabled();

}  // namespace qaoadepth
