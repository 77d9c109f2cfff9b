#include "qaoadepth/coloring.hpp"

#include "qaoadepth/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace qaoadepth {

std::string to_string(ColoringMethod method) {
  switch (method) {
    case ColoringMethod::exact: return "exact";
    case ColoringMethod::misra_gries: return "misra_gries";
    case ColoringMethod::greedy: return "greedy";
    case ColoringMethod::merged: return "merge_exact";
  }
  return "greedy";
}

namespace {

/// Edge indices per vertex, keyed by position in h.vertices.
std::vector<std::vector<std::size_t>> incidence(const DerivedHypergraph& h) {
  std::map<VarId, std::size_t> index;
  for (std::size_t i = 0; i < h.vertices.size(); ++i) index.emplace(h.vertices[i], i);
  std::vector<std::vector<std::size_t>> out(h.vertices.size());
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    for (const auto& v : h.edges[e].support) {
      auto it = index.find(v);
      if (it == index.end()) throw Error(ErrorKind::invalid_input, "hyperedge uses unknown vertex '" + v.name + "'");
      out[it->second].push_back(e);
    }
  }
  return out;
}

/// conflicts[e] = edges sharing a vertex with e (sorted, without e).
std::vector<std::vector<std::size_t>> conflict_lists(const DerivedHypergraph& h) {
  std::vector<std::set<std::size_t>> sets(h.edges.size());
  for (const auto& through : incidence(h)) {
    for (auto a : through)
      for (auto b : through)
        if (a != b) sets[a].insert(b);
  }
  std::vector<std::vector<std::size_t>> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.emplace_back(s.begin(), s.end());
  return out;
}

EdgeColoring from_colors(const std::vector<int>& color, ColoringMethod method) {
  EdgeColoring out;
  out.method = method;
  int count = 0;
  for (int c : color) count = std::max(count, c + 1);
  out.classes.resize(static_cast<std::size_t>(count));
  for (std::size_t e = 0; e < color.size(); ++e) out.classes[static_cast<std::size_t>(color[e])].push_back(e);
  std::erase_if(out.classes, [](const auto& cls) { return cls.empty(); });
  return out;
}

std::size_t greedy_clique(const std::vector<std::vector<std::size_t>>& conflicts) {
  const std::size_t m = conflicts.size();
  if (m == 0) return 0;
  if (m > 400) return 1;
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return conflicts[a].size() > conflicts[b].size(); });
  std::size_t best = 1;
  for (auto seed : order) {
    std::vector<std::size_t> clique{seed};
    for (auto cand : order) {
      if (cand == seed) continue;
      bool adjacent_to_all = std::all_of(clique.begin(), clique.end(), [&](auto member) {
        return std::binary_search(conflicts[cand].begin(), conflicts[cand].end(), member);
      });
      if (adjacent_to_all) clique.push_back(cand);
    }
    best = std::max(best, clique.size());
  }
  return best;
}

/// Any color class restricted to a vertex subset S is a matching inside S,
/// so it holds at most floor(|S| / r) edges, r the smallest edge inside S.
std::size_t density_bound(const DerivedHypergraph& h) {
  std::vector<VarId> covered;
  {
    std::set<VarId> seen;
    for (const auto& e : h.edges) seen.insert(e.support.begin(), e.support.end());
    covered.assign(seen.begin(), seen.end());
  }
  if (covered.size() > 16 || h.edges.empty()) return 0;
  std::vector<std::uint32_t> masks;
  for (const auto& e : h.edges) {
    std::uint32_t mask = 0;
    for (const auto& v : e.support) {
      mask |= 1U << static_cast<std::uint32_t>(std::lower_bound(covered.begin(), covered.end(), v) - covered.begin());
    }
    masks.push_back(mask);
  }
  std::size_t best = 0;
  const std::uint32_t full = (1U << covered.size());
  for (std::uint32_t s = 1; s < full; ++s) {
    std::size_t inside = 0;
    std::size_t smallest = covered.size() + 1;
    for (std::size_t e = 0; e < masks.size(); ++e) {
      if ((masks[e] & s) == masks[e]) {
        ++inside;
        smallest = std::min(smallest, h.edges[e].support.size());
      }
    }
    if (inside == 0) continue;
    const std::size_t per_class = static_cast<std::size_t>(std::popcount(s)) / smallest;
    if (per_class == 0) continue;
    best = std::max(best, (inside + per_class - 1) / per_class);
  }
  return best;
}

/// k-colorability search with saturation-first branching.
class KColorSearch {
 public:
  KColorSearch(const std::vector<std::vector<std::size_t>>& conflicts, std::size_t k, std::size_t budget,
               std::size_t& nodes)
      : conflicts_(conflicts),
        k_(k),
        budget_(budget),
        nodes_(nodes),
        color_(conflicts.size(), -1),
        forbidden_(conflicts.size(), std::vector<int>(k, 0)),
        saturation_(conflicts.size(), 0) {}

  enum class Outcome { found, impossible, budget };

  Outcome run() {
    const bool ok = descend(0, 0);
    if (aborted_) return Outcome::budget;
    return ok ? Outcome::found : Outcome::impossible;
  }

  const std::vector<int>& colors() const { return color_; }

 private:
  bool descend(std::size_t colored, std::size_t used) {
    if (colored == color_.size()) return true;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    std::size_t pick = color_.size();
    for (std::size_t e = 0; e < color_.size(); ++e) {
      if (color_[e] != -1) continue;
      if (pick == color_.size() || saturation_[e] > saturation_[pick] ||
          (saturation_[e] == saturation_[pick] && conflicts_[e].size() > conflicts_[pick].size())) {
        pick = e;
      }
    }
    const std::size_t limit = std::min(used + 1, k_);
    for (std::size_t c = 0; c < limit; ++c) {
      if (forbidden_[pick][c] != 0) continue;
      const bool dead = assign(pick, static_cast<int>(c));
      if (!dead && descend(colored + 1, std::max(used, c + 1))) return true;
      unassign(pick, static_cast<int>(c));
      if (aborted_) return false;
    }
    return false;
  }

  /// Returns true when some uncolored neighbor is left with no color.
  bool assign(std::size_t e, int c) {
    color_[e] = c;
    bool dead = false;
    for (auto f : conflicts_[e]) {
      if (color_[f] != -1) continue;
      if (forbidden_[f][c]++ == 0 && ++saturation_[f] == k_) dead = true;
    }
    return dead;
  }

  void unassign(std::size_t e, int c) {
    color_[e] = -1;
    for (auto f : conflicts_[e]) {
      if (color_[f] != -1) continue;
      if (--forbidden_[f][c] == 0) --saturation_[f];
    }
  }

  const std::vector<std::vector<std::size_t>>& conflicts_;
  std::size_t k_;
  std::size_t budget_;
  std::size_t& nodes_;
  std::vector<int> color_;
  std::vector<std::vector<int>> forbidden_;
  std::vector<std::size_t> saturation_;
  bool aborted_ = false;
};

}  // namespace

ColoringCheck check_coloring(const DerivedHypergraph& h, const EdgeColoring& coloring) {
  std::vector<int> seen(h.edges.size(), 0);
  for (std::size_t c = 0; c < coloring.classes.size(); ++c) {
    std::set<VarId> used;
    for (auto e : coloring.classes[c]) {
      if (e >= h.edges.size()) {
        return {false, "class " + std::to_string(c) + " names edge " + std::to_string(e) + " which does not exist"};
      }
      ++seen[e];
      for (const auto& v : h.edges[e].support) {
        if (!used.insert(v).second) {
          return {false, "class " + std::to_string(c) + " uses vertex '" + v.name + "' twice"};
        }
      }
    }
  }
  for (std::size_t e = 0; e < seen.size(); ++e) {
    if (seen[e] != 1) {
      return {false, "edge " + std::to_string(e) + " appears in " + std::to_string(seen[e]) + " classes"};
    }
  }
  return {true, "proper"};
}

std::optional<std::size_t> ColoringBounds::best_upper() const {
  std::optional<std::size_t> best;
  for (const auto& b : uppers) {
    if (!b.applicable || !b.value || (b.status != "theorem" && b.status != "proven case")) continue;
    if (!best || *b.value < *best) best = b.value;
  }
  return best;
}

ColoringBounds bounds(const DerivedHypergraph& h) {
  ColoringBounds out;
  const auto conflicts = conflict_lists(h);
  out.lower = std::max({h.max_degree(), greedy_clique(conflicts), density_bound(h)});

  const std::size_t m = h.edges.size();
  const std::size_t n = h.covered_vertex_count();
  const std::size_t delta = h.max_degree();
  const bool linear = h.is_linear();
  const auto k = h.uniformity();

  out.uppers.push_back({"edge count", "|E|", m, "theorem", true, "always"});
  out.uppers.push_back({"Vizing", "Delta + 1", delta + 1, "theorem", k && *k == 2, "2-uniform (simple graph)"});
  if (n > 0) {
    const auto chang_lawler = static_cast<std::size_t>(std::ceil(1.5 * static_cast<double>(n) - 2.0));
    out.uppers.push_back({"Chang-Lawler", "ceil(1.5n - 2)", chang_lawler, "theorem", linear, "linear hypergraph"});
    const double efl_threshold = std::sqrt(static_cast<double>(n) + std::sqrt(static_cast<double>(n)) + 1.0);
    const bool efl_proven = static_cast<double>(delta) <= efl_threshold;
    out.uppers.push_back({"Erdos-Faber-Lovasz", "n", n, efl_proven ? "proven case" : "conjecture", linear,
                          efl_proven ? "linear hypergraph with Delta <= sqrt(n + sqrt(n) + 1)" : "linear hypergraph"});
    out.uppers.push_back({"Kahn", "n + o(n)", std::nullopt, "asymptotic", linear, "linear hypergraph"});
  }
  out.uppers.push_back({"Pippenger-Spencer", "(1 + delta) Delta", std::nullopt, "asymptotic", k && *k >= 3,
                        "k-uniform, min degree ~ max degree, small codegree"});
  return out;
}

std::optional<EdgeColoring> color_exact(const DerivedHypergraph& h, std::size_t budget) {
  const std::size_t m = h.edges.size();
  const ColoringBounds b = bounds(h);
  if (m == 0) {
    EdgeColoring empty;
    empty.method = ColoringMethod::exact;
    empty.optimal = true;
    empty.upper_bound_refs = b.uppers;
    return empty;
  }

  EdgeColoring best = color_greedy(h, GreedyOrder::degree_desc);
  if (auto k = h.uniformity(); k && *k == 2) {
    EdgeColoring mg = color_misra_gries(h);
    if (mg.size() < best.size()) best = std::move(mg);
  }

  const auto conflicts = conflict_lists(h);
  std::size_t nodes = 0;
  for (std::size_t k = b.lower; k < best.size(); ++k) {
    KColorSearch search(conflicts, k, budget, nodes);
    const auto outcome = search.run();
    if (outcome == KColorSearch::Outcome::budget) return std::nullopt;
    if (outcome == KColorSearch::Outcome::found) {
      best = from_colors(search.colors(), ColoringMethod::exact);
      break;
    }
  }
  best.method = ColoringMethod::exact;
  best.optimal = true;
  best.lower_bound = best.size();
  best.search_nodes = nodes;
  best.upper_bound_refs = b.uppers;
  return best;
}

EdgeColoring color_greedy(const DerivedHypergraph& h, GreedyOrder order) {
  const auto conflicts = conflict_lists(h);
  std::vector<std::size_t> sequence(h.edges.size());
  std::iota(sequence.begin(), sequence.end(), 0);
  if (order == GreedyOrder::degree_desc) {
    std::stable_sort(sequence.begin(), sequence.end(),
                     [&](auto a, auto b) { return conflicts[a].size() > conflicts[b].size(); });
  }
  std::vector<int> color(h.edges.size(), -1);
  for (auto e : sequence) {
    std::vector<char> taken(conflicts[e].size() + 1, 0);
    for (auto f : conflicts[e]) {
      if (color[f] >= 0 && static_cast<std::size_t>(color[f]) < taken.size()) taken[static_cast<std::size_t>(color[f])] = 1;
    }
    int c = 0;
    while (taken[static_cast<std::size_t>(c)]) ++c;
    color[e] = c;
  }
  EdgeColoring out = from_colors(color, ColoringMethod::greedy);
  const ColoringBounds b = bounds(h);
  out.lower_bound = b.lower;
  out.upper_bound_refs = b.uppers;
  out.optimal = out.size() == b.lower;
  return out;
}

EdgeColoring color_misra_gries(const DerivedHypergraph& h) {
  for (const auto& e : h.edges) {
    if (e.support.size() != 2) {
      throw Error(ErrorKind::invalid_input, "Misra-Gries coloring needs a simple graph; found a hyperedge with " +
                                                std::to_string(e.support.size()) + " vertices");
    }
  }
  const std::size_t n = h.vertices.size();
  const std::size_t m = h.edges.size();
  const std::size_t palette = h.max_degree() + 1;

  std::map<VarId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(h.vertices[i], i);
  std::vector<std::pair<std::size_t, std::size_t>> ends(m);
  std::vector<std::vector<std::size_t>> adjacent(n);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_of;
  for (std::size_t e = 0; e < m; ++e) {
    const std::size_t a = index.at(h.edges[e].support[0]);
    const std::size_t b = index.at(h.edges[e].support[1]);
    ends[e] = {a, b};
    adjacent[a].push_back(b);
    adjacent[b].push_back(a);
    edge_of[{std::min(a, b), std::max(a, b)}] = e;
  }

  constexpr int none = -1;
  // at[v][c] = neighbor reached from v by the edge colored c.
  std::vector<std::vector<long>> at(n, std::vector<long>(palette, none));
  std::vector<int> color(m, none);
  auto edge_index = [&](std::size_t a, std::size_t b) { return edge_of.at({std::min(a, b), std::max(a, b)}); };
  auto color_of = [&](std::size_t a, std::size_t b) { return color[edge_index(a, b)]; };
  auto is_free = [&](std::size_t v, int c) { return at[v][static_cast<std::size_t>(c)] == none; };
  auto set_color = [&](std::size_t a, std::size_t b, int c) {
    const std::size_t e = edge_index(a, b);
    if (color[e] != none) {
      at[a][static_cast<std::size_t>(color[e])] = none;
      at[b][static_cast<std::size_t>(color[e])] = none;
    }
    color[e] = c;
    if (c != none) {
      at[a][static_cast<std::size_t>(c)] = static_cast<long>(b);
      at[b][static_cast<std::size_t>(c)] = static_cast<long>(a);
    }
  };
  auto free_color = [&](std::size_t v) {
    for (std::size_t c = 0; c < palette; ++c)
      if (at[v][c] == none) return static_cast<int>(c);
    throw Error(ErrorKind::invalid_input, "no free color at a vertex; palette too small");
  };

  for (std::size_t e = 0; e < m; ++e) {
    const std::size_t u = ends[e].first;
    const std::size_t v = ends[e].second;

    // Maximal fan of u starting at v.
    std::vector<std::size_t> fan{v};
    std::vector<char> in_fan(n, 0);
    in_fan[v] = 1;
    for (bool extended = true; extended;) {
      extended = false;
      for (auto w : adjacent[u]) {
        if (in_fan[w]) continue;
        const int cw = color_of(u, w);
        if (cw != none && is_free(fan.back(), cw)) {
          fan.push_back(w);
          in_fan[w] = 1;
          extended = true;
          break;
        }
      }
    }

    const int c = free_color(u);
    const int d = free_color(fan.back());

    // Swap c and d along the path from u that starts with a d-edge.
    if (!is_free(u, d)) {
      struct Step {
        std::size_t a, b;
        int c;
      };
      std::vector<Step> path;
      std::size_t x = u;
      int want = d;
      while (at[x][static_cast<std::size_t>(want)] != none) {
        const auto y = static_cast<std::size_t>(at[x][static_cast<std::size_t>(want)]);
        path.push_back({x, y, want});
        x = y;
        want = want == d ? c : d;
        if (path.size() > m) break;
      }
      for (const auto& s : path) set_color(s.a, s.b, none);
      for (const auto& s : path) set_color(s.a, s.b, s.c == d ? c : d);
    }

    // Longest prefix of the fan that is still a fan; first vertex on it with d free.
    std::size_t w = fan.size();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (i > 0) {
        const int ci = color_of(u, fan[i]);
        if (ci == none || !is_free(fan[i - 1], ci)) break;
      }
      if (is_free(fan[i], d)) {
        w = i;
        break;
      }
    }
    if (w == fan.size()) throw Error(ErrorKind::invalid_input, "Misra-Gries invariant violated");

    for (std::size_t j = 0; j < w; ++j) {
      const int next = color_of(u, fan[j + 1]);
      set_color(u, fan[j + 1], none);
      set_color(u, fan[j], next);
    }
    set_color(u, fan[w], d);
  }

  EdgeColoring out = from_colors(color, ColoringMethod::misra_gries);
  const ColoringBounds b = bounds(h);
  out.lower_bound = b.lower;
  out.upper_bound_refs = b.uppers;
  out.optimal = out.size() == b.lower;
  return out;
}

}  // namespace qaoadepth
