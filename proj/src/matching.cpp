// Maximum-cardinality matching in general graphs: Edmonds' augmenting paths with blossom
// contraction, one BFS per exposed root, neighbors scanned in ascending order.

#include <algorithm>
#include <queue>

#include "a2i/oracles.hpp"

namespace a2i {

namespace {

class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.order()), match_(n_, -1), parent_(n_), base_(n_), used_(n_), blossom_(n_) {}

  void run() {
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      Vertex u = find_path(v);
      while (u != -1) {
        Vertex pv = parent_[u];
        Vertex ppv = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = ppv;
      }
    }
  }

  Matching result() const {
    Matching m;
    for (Vertex v = 0; v < n_; ++v)
      if (match_[v] > v) m.edges.emplace_back(v, match_[v]);
    return m;
  }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          Vertex cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (!blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = 1;
              q.push(i);
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> match_, parent_, base_;
  std::vector<char> used_, blossom_;
};

}  // namespace

Matching max_matching(const Graph& g) {
  Blossom b(g);
  b.run();
  return b.result();
}

}  // namespace a2i
