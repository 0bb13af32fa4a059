#include "a2i/oracles.hpp"

#include <algorithm>

namespace a2i {

std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    const VertexSet& nu = g.neighbors(u);
    for (Vertex v = nu.next(u); v != -1; v = nu.next(v)) {
      VertexSet common = nu & g.neighbors(v);
      Vertex w = common.next(v);
      if (w != -1) return std::array<Vertex, 3>{u, v, w};
    }
  }
  return std::nullopt;
}

bool alpha_at_most_2(const Graph& g) { return !find_triangle(complement(g)); }

namespace {

// Branch and bound with greedy-coloring bounds over bitset candidate sets.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, int lower, int target) : g_(g), best_size_(lower), target_(target) {}

  void run(const VertexSet& candidates) {
    if (!candidates.empty()) expand(candidates);
  }

  int best_size() const { return best_size_; }
  const std::vector<Vertex>& best() const { return best_; }
  bool found() const { return !best_.empty(); }

 private:
  bool expand(VertexSet p) {
    order_buf_.clear();
    color_buf_.clear();
    VertexSet q = p;
    int k = 0;
    while (!q.empty()) {
      ++k;
      VertexSet u = q;
      while (!u.empty()) {
        Vertex v = u.first();
        u.erase(v);
        u -= g_.neighbors(v);
        q.erase(v);
        order_buf_.push_back(v);
        color_buf_.push_back(k);
      }
    }
    std::vector<Vertex> order = order_buf_;
    std::vector<int> color = color_buf_;
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (static_cast<int>(current_.size()) + color[i] <= best_size_) return false;
      Vertex v = order[i];
      current_.push_back(v);
      VertexSet next = p & g_.neighbors(v);
      if (next.empty()) {
        if (static_cast<int>(current_.size()) > best_size_) {
          best_size_ = static_cast<int>(current_.size());
          best_ = current_;
          if (target_ > 0 && best_size_ >= target_) return true;
        }
      } else if (expand(next)) {
        return true;
      }
      current_.pop_back();
      p.erase(v);
    }
    return false;
  }

  const Graph& g_;
  int best_size_;
  int target_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
  std::vector<Vertex> order_buf_;
  std::vector<int> color_buf_;
};

}  // namespace

int clique_number(const Graph& g) {
  CliqueSearch search(g, 0, -1);
  search.run(g.vertices());
  return search.best_size();
}

std::optional<VertexSet> find_clique_of_size(const Graph& g, const VertexSet& candidates,
                                             int size) {
  if (size <= 0) return VertexSet(g.order());
  CliqueSearch search(g, size - 1, size);
  search.run(candidates);
  if (!search.found()) return std::nullopt;
  auto members = search.best();
  members.resize(size);
  return VertexSet(g.order(), std::span<const Vertex>(members));
}

VertexSet max_clique(const Graph& g) {
  // Fix the clique number first, then pick members greedily in ascending order, keeping a
  // vertex only if the remaining budget still fits among larger candidates.
  int need = clique_number(g);
  VertexSet chosen(g.order());
  VertexSet cand = g.vertices();
  for (Vertex v = 0; v < g.order() && need > 0; ++v) {
    if (!cand.test(v)) continue;
    VertexSet rest = cand & g.neighbors(v);
    for (Vertex w = rest.first(); w != -1 && w < v; w = rest.next(w)) rest.erase(w);
    if (need == 1 || find_clique_of_size(g, rest, need - 1)) {
      chosen.insert(v);
      cand = rest;
      --need;
    }
  }
  return chosen;
}

int independence_number(const Graph& g) { return clique_number(complement(g)); }

int chromatic_number_alpha2(const Graph& g) {
  Graph co = complement(g);
  if (find_triangle(co)) throw Error(Errc::AlphaTooLarge, "independence number exceeds 2");
  return g.order() - max_matching(co).size();
}

namespace {

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int k)
      : g_(g), k_(k), color_(g.order(), -1), forbidden_(static_cast<std::size_t>(g.order()) * k, 0) {}

  bool run() { return solve(0, 0); }

  Coloring result() const {
    Coloring out;
    for (int c = 0; c < k_; ++c) {
      VertexSet cls(g_.order());
      for (Vertex v = 0; v < g_.order(); ++v)
        if (color_[v] == c) cls.insert(v);
      if (!cls.empty()) out.classes.push_back(std::move(cls));
    }
    return out;
  }

 private:
  int& forb(Vertex v, int c) { return forbidden_[static_cast<std::size_t>(v) * k_ + c]; }

  Vertex pick() {
    Vertex best = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (color_[v] != -1) continue;
      int sat = 0;
      for (int c = 0; c < k_; ++c) sat += forb(v, c) > 0;
      int deg = g_.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  void assign(Vertex v, int c, int delta) {
    for (Vertex w : g_.neighbors(v)) forb(w, c) += delta;
  }

  bool solve(int colored, int used) {
    if (colored == g_.order()) return true;
    Vertex v = pick();
    int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      if (forb(v, c)) continue;
      color_[v] = c;
      assign(v, c, +1);
      if (solve(colored + 1, std::max(used, c + 1))) return true;
      assign(v, c, -1);
      color_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> color_;
  std::vector<int> forbidden_;
};

}  // namespace

std::optional<Coloring> is_k_colorable(const Graph& g, int k) {
  if (k < 0) throw Error(Errc::InvalidArgument, "negative color count");
  if (g.order() == 0) return Coloring{};
  if (k == 0) return std::nullopt;
  ColoringSearch search(g, k);
  if (!search.run()) return std::nullopt;
  return search.result();
}

int chromatic_number_backtracking(const Graph& g) {
  for (int k = 0;; ++k)
    if (is_k_colorable(g, k)) return k;
}

std::optional<int> clique_cover_number(const Graph& g, int cap) {
  Graph co = complement(g);
  for (int k = 0; k <= cap; ++k)
    if (is_k_colorable(co, k)) return k;
  return std::nullopt;
}

GateReport gate_check(const Graph& g) {
  GateReport r;
  r.n = g.order();
  r.max_degree = g.max_degree();
  r.alpha_le_2 = alpha_at_most_2(g);
  const long long n = r.n;
  const long long delta = r.max_degree;
  r.thm4 = n >= 11 && 29 * delta < 19 * n - 29;
  r.clique_cover = clique_cover_number(g, 3);
  r.thm5 = 3 * delta < 2 * n - 3 && r.clique_cover.has_value();
  return r;
}

}  // namespace a2i
