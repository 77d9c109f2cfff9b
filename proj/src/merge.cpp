#include "qaoadepth/merge.hpp"

#include "qaoadepth/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qaoadepth {

namespace {

using VertexSet = std::vector<std::size_t>;

bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

VertexSet unite(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct Gate {
  VertexSet vertices;
  std::vector<std::size_t> edges;
};

using ColorClass = std::vector<Gate>;

class MergeSearch {
 public:
  MergeSearch(std::vector<VertexSet> edges, std::size_t width, std::size_t budget)
      : edges_(std::move(edges)), width_(width), budget_(budget) {
    const std::size_t m = edges_.size();
    std::vector<std::size_t> degree(m, 0);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (a != b && intersects(edges_[a], edges_[b])) ++degree[a];
    order_.resize(m);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](auto a, auto b) { return degree[a] > degree[b]; });
    lower_ = hard_clique();
  }

  /// Seeds the incumbent with a known solution.
  void seed(std::vector<ColorClass> solution) {
    best_ = std::move(solution);
    best_count_ = best_.size();
  }

  bool run() {
    if (best_count_ > lower_) descend(0);
    return !aborted_;
  }

  const std::vector<ColorClass>& best() const { return best_; }
  std::size_t nodes() const { return nodes_; }

 private:
  /// Edges that overlap and together exceed the width can never share a
  /// color; a pairwise set of such edges bounds the answer from below.
  std::size_t hard_clique() const {
    const std::size_t m = edges_.size();
    auto hard = [&](std::size_t a, std::size_t b) {
      return intersects(edges_[a], edges_[b]) && unite(edges_[a], edges_[b]).size() > width_;
    };
    std::size_t best = m ? 1 : 0;
    for (auto seed : order_) {
      std::vector<std::size_t> clique{seed};
      for (auto cand : order_) {
        if (cand == seed) continue;
        if (std::all_of(clique.begin(), clique.end(), [&](auto x) { return hard(x, cand); })) clique.push_back(cand);
      }
      best = std::max(best, clique.size());
    }
    return best;
  }

  void descend(std::size_t i) {
    if (done_ || aborted_) return;
    if (classes_.size() >= best_count_) return;
    if (i == edges_.size()) {
      best_ = classes_;
      best_count_ = classes_.size();
      if (best_count_ <= lower_) done_ = true;
      return;
    }
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    const std::size_t e = order_[i];
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      VertexSet fused = edges_[e];
      std::vector<std::size_t> touched;
      for (std::size_t g = 0; g < classes_[c].size(); ++g) {
        if (intersects(classes_[c][g].vertices, edges_[e])) {
          touched.push_back(g);
          fused = unite(fused, classes_[c][g].vertices);
        }
      }
      if (fused.size() > width_) continue;

      const ColorClass saved = classes_[c];
      Gate merged{fused, {e}};
      ColorClass next;
      for (std::size_t g = 0; g < saved.size(); ++g) {
        if (std::find(touched.begin(), touched.end(), g) != touched.end()) {
          merged.edges.insert(merged.edges.end(), saved[g].edges.begin(), saved[g].edges.end());
        } else {
          next.push_back(saved[g]);
        }
      }
      next.push_back(std::move(merged));
      classes_[c] = std::move(next);
      descend(i + 1);
      classes_[c] = saved;
      if (done_ || aborted_) return;
    }
    if (classes_.size() + 1 < best_count_) {
      classes_.push_back(ColorClass{Gate{edges_[e], {e}}});
      descend(i + 1);
      classes_.pop_back();
    }
  }

  std::vector<VertexSet> edges_;
  std::size_t width_;
  std::size_t budget_;
  std::vector<std::size_t> order_;
  std::vector<ColorClass> classes_;
  std::vector<ColorClass> best_;
  std::size_t best_count_ = 0;
  std::size_t lower_ = 0;
  std::size_t nodes_ = 0;
  bool aborted_ = false;
  bool done_ = false;
};

}  // namespace

std::optional<MergeResult> merge_exact(const DerivedHypergraph& h, GateWidthLimit limit, std::size_t budget) {
  check_gate_width(h, limit);

  std::map<VarId, std::size_t> index;
  for (std::size_t i = 0; i < h.vertices.size(); ++i) index.emplace(h.vertices[i], i);
  std::vector<VertexSet> edges;
  for (const auto& e : h.edges) {
    VertexSet s;
    for (const auto& v : e.support) s.push_back(index.at(v));
    std::sort(s.begin(), s.end());
    edges.push_back(std::move(s));
  }

  // Any proper coloring is a valid starting point: each edge its own gate.
  const EdgeColoring greedy = color_greedy(h, GreedyOrder::degree_desc);
  std::vector<ColorClass> incumbent;
  for (const auto& cls : greedy.classes) {
    ColorClass c;
    for (auto e : cls) c.push_back(Gate{edges[e], {e}});
    incumbent.push_back(std::move(c));
  }

  MergeSearch search(edges, limit.value(), budget);
  search.seed(std::move(incumbent));
  if (!search.run()) return std::nullopt;

  MergeResult out;
  out.merged.vertices = h.vertices;
  out.merged.singletons = h.singletons;
  out.merged.constant = h.constant;
  for (auto cls : search.best()) {
    for (auto& gate : cls) std::sort(gate.edges.begin(), gate.edges.end());
    std::sort(cls.begin(), cls.end(), [](const Gate& a, const Gate& b) { return a.edges.front() < b.edges.front(); });
    std::vector<std::size_t> members;
    for (const auto& gate : cls) {
      Hyperedge fused;
      for (auto v : gate.vertices) fused.support.push_back(h.vertices[v]);
      std::sort(fused.support.begin(), fused.support.end());
      for (auto e : gate.edges) fused.terms += h.edges[e].terms;
      members.push_back(out.merged.edges.size());
      out.merged.edges.push_back(std::move(fused));
    }
    out.coloring.classes.push_back(std::move(members));
  }
  out.coloring.method = ColoringMethod::merged;
  out.coloring.optimal = true;
  out.coloring.lower_bound = out.coloring.size();
  out.coloring.search_nodes = search.nodes();
  out.coloring.upper_bound_refs = bounds(out.merged).uppers;
  return out;
}

}  // namespace qaoadepth
