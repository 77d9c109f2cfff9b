#include "qaoadepth/hypergraph.hpp"

#include "qaoadepth/error.hpp"

#include <algorithm>
#include <set>

namespace qaoadepth {

namespace {

bool strict_subset(const Support& a, const Support& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::size_t intersection_size(const Support& a, const Support& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::string support_name(const Support& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i].name;
  return out + "}";
}

}  // namespace

std::size_t DerivedHypergraph::vertex_index(const VarId& v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  if (it == vertices.end()) throw Error(ErrorKind::invalid_input, "'" + v.name + "' is not a vertex");
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<std::size_t> DerivedHypergraph::degrees() const {
  std::vector<std::size_t> deg(vertices.size(), 0);
  for (const auto& e : edges)
    for (const auto& v : e.support) ++deg[vertex_index(v)];
  return deg;
}

std::size_t DerivedHypergraph::max_degree() const {
  auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::size_t DerivedHypergraph::max_edge_size() const {
  std::size_t w = 0;
  for (const auto& e : edges) w = std::max(w, e.support.size());
  return w;
}

std::size_t DerivedHypergraph::neighbor_count(const VarId& v) const {
  std::set<VarId> seen;
  for (const auto& e : edges) {
    if (std::binary_search(e.support.begin(), e.support.end(), v)) seen.insert(e.support.begin(), e.support.end());
  }
  seen.erase(v);
  return seen.size();
}

std::size_t DerivedHypergraph::covered_vertex_count() const {
  std::set<VarId> seen;
  for (const auto& e : edges) seen.insert(e.support.begin(), e.support.end());
  return seen.size();
}

bool DerivedHypergraph::is_linear() const {
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (intersection_size(edges[i].support, edges[j].support) > 1) return false;
  return true;
}

std::optional<std::size_t> DerivedHypergraph::uniformity() const {
  if (edges.empty()) return std::nullopt;
  const std::size_t k = edges.front().support.size();
  for (const auto& e : edges)
    if (e.support.size() != k) return std::nullopt;
  return k;
}

Polynomial DerivedHypergraph::total() const {
  Polynomial out = singletons;
  out += Polynomial(constant);
  for (const auto& e : edges) out += e.terms;
  return out;
}

GateWidthLimit::GateWidthLimit(std::size_t width) : width_(width) {
  if (width < 2) throw Error(ErrorKind::invalid_input, "gate width must be at least 2");
}

DerivedHypergraph build(const Pubo& pubo) {
  DerivedHypergraph h;
  h.vertices = pubo.variables;
  for (const auto& v : pubo.objective.variables()) {
    if (std::find(h.vertices.begin(), h.vertices.end(), v) == h.vertices.end()) h.vertices.push_back(v);
  }
  for (const auto& [support, c] : pubo.objective.terms()) {
    if (support.empty()) {
      h.constant = c;
    } else if (support.size() == 1) {
      h.singletons.add_term(support, c);
    } else {
      h.edges.push_back(Hyperedge{support, Polynomial::term(support, c)});
    }
  }
  return h;
}

DerivedHypergraph absorb_subsets(const DerivedHypergraph& h, GateWidthLimit limit) {
  const std::size_t m = h.edges.size();
  std::vector<std::size_t> target(m);
  for (std::size_t i = 0; i < m; ++i) {
    target[i] = i;
    std::size_t best_size = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const auto& candidate = h.edges[j].support;
      if (j == i || candidate.size() > limit.value()) continue;
      if (candidate.size() > best_size && strict_subset(h.edges[i].support, candidate)) {
        target[i] = j;
        best_size = candidate.size();
      }
    }
  }

  DerivedHypergraph out;
  out.vertices = h.vertices;
  out.singletons = h.singletons;
  out.constant = h.constant;
  std::vector<std::size_t> slot(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    if (target[i] == i) {
      slot[i] = out.edges.size();
      out.edges.push_back(h.edges[i]);
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    // The widest superset is never itself absorbed, so targets are roots.
    if (target[i] != i) out.edges[slot[target[i]]].terms += h.edges[i].terms;
  }
  return out;
}

void check_gate_width(const DerivedHypergraph& h, GateWidthLimit limit) {
  for (const auto& e : h.edges) {
    if (e.support.size() > limit.value()) {
      throw Error(ErrorKind::gate_width,
                  "hyperedge " + support_name(e.support) + " needs a " + std::to_string(e.support.size()) +
                      "-qubit gate but the gate width is " + std::to_string(limit.value()) +
                      "; raise --gate-width (decomposing wide gates into narrower ones is not supported)");
    }
  }
}

DerivedHypergraph hypergraph_from_supports(const std::vector<std::vector<std::string>>& supports) {
  DerivedHypergraph h;
  std::set<VarId> vertices;
  for (const auto& names : supports) {
    Support s;
    for (const auto& n : names) s.push_back(VarId::original(n));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.size() < 2) throw Error(ErrorKind::invalid_input, "hyperedges need at least two vertices");
    vertices.insert(s.begin(), s.end());
    h.edges.push_back(Hyperedge{s, Polynomial::term(s, Rational(1))});
  }
  h.vertices.assign(vertices.begin(), vertices.end());
  return h;
}

}  // namespace qaoadepth
