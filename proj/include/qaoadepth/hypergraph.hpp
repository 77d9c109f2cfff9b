#pragma once

#include "qaoadepth/dualizer.hpp"

#include <optional>
#include <vector>

namespace qaoadepth {

/// A multi-qubit diagonal gate: a support and the monomials it implements
/// (every monomial's support is a subset of the edge support).
struct Hyperedge {
  Support support;
  Polynomial terms;
};

/// Vertices are variables; hyperedges are the distinct supports of size >= 2.
/// Single-variable terms and the constant are kept aside.
struct DerivedHypergraph {
  std::vector<VarId> vertices;
  std::vector<Hyperedge> edges;
  Polynomial singletons;
  Rational constant;

  std::size_t vertex_index(const VarId& v) const;
  /// Number of hyperedges containing each vertex (parallel to vertices).
  std::vector<std::size_t> degrees() const;
  std::size_t max_degree() const;
  std::size_t max_edge_size() const;
  /// Vertices sharing at least one hyperedge with v.
  std::size_t neighbor_count(const VarId& v) const;
  /// Number of vertices that lie in at least one hyperedge.
  std::size_t covered_vertex_count() const;

  bool is_linear() const;
  /// k when every hyperedge has exactly k vertices.
  std::optional<std::size_t> uniformity() const;

  /// Sum of every hyperedge's terms, the singletons and the constant.
  Polynomial total() const;
};

/// Maximum number of qubits a single hardware gate may touch.
class GateWidthLimit {
 public:
  explicit GateWidthLimit(std::size_t width);
  std::size_t value() const noexcept { return width_; }

 private:
  std::size_t width_;
};

DerivedHypergraph build(const Pubo& pubo);

/// Folds every hyperedge into the widest hyperedge (within the limit) whose
/// support strictly contains it. Hyperedges wider than the limit are kept as
/// they are; check_gate_width reports them.
DerivedHypergraph absorb_subsets(const DerivedHypergraph& h, GateWidthLimit limit);

/// Throws Error(gate_width) naming the first hyperedge wider than the limit.
void check_gate_width(const DerivedHypergraph& h, GateWidthLimit limit);

/// Convenience for tests and fixtures: a hypergraph with the given supports,
/// each carrying a unit monomial.
DerivedHypergraph hypergraph_from_supports(const std::vector<std::vector<std::string>>& supports);

}  // namespace qaoadepth
