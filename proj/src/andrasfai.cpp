#include "a2i/andrasfai.hpp"

#include <algorithm>

#include "a2i/oracles.hpp"

namespace a2i {

namespace {

void require_d(int d) {
  if (d < 1) throw Error(Errc::InvalidArgument, "Andrasfai index d must be positive");
}

bool gamma_adjacent(int d, Vertex a, Vertex b) {
  const int m = 3 * d - 1;
  int diff = ((b - a) % m + m) % m;
  return diff >= d && diff <= 2 * d - 1;
}

}  // namespace

GammaGraph build_gamma(int d) {
  require_d(d);
  GammaGraph out{d, Graph(3 * d - 1)};
  for (Vertex a = 0; a < out.order(); ++a)
    for (Vertex b = a + 1; b < out.order(); ++b)
      if (gamma_adjacent(d, a, b)) out.graph.add_edge(a, b);
  return out;
}

VertexSet gamma_window(int d, int start) {
  require_d(d);
  const int m = 3 * d - 1;
  VertexSet w(m);
  for (int i = 0; i < d; ++i) w.insert(((start + i) % m + m) % m);
  return w;
}

std::vector<VertexSet> gamma_maximal_independent_sets(int d) {
  require_d(d);
  std::vector<VertexSet> out;
  for (int s = 0; s < 3 * d - 1; ++s) out.push_back(gamma_window(d, s));
  return out;
}

TriColoring gamma_coloring(int d, const VertexSet& d1) {
  require_d(d);
  const int m = 3 * d - 1;
  if (d1.universe() != m) throw Error(Errc::NotWindow, "window universe mismatch");
  for (int s = 0; s < m; ++s) {
    if (gamma_window(d, s) != d1) continue;
    TriColoring c{{d1, VertexSet(m), VertexSet(m)}};
    for (int i = 0; i < d; ++i) c.parts[1].insert((s + d + i) % m);
    for (int i = 0; i < d - 1; ++i) c.parts[2].insert((s + 2 * d + i) % m);
    return c;
  }
  throw Error(Errc::NotWindow, "D1 is not a window of d cyclically consecutive vertices",
              d1.to_vector());
}

std::optional<std::array<Vertex, 4>> find_induced_c4(const Graph& g, const VertexSet& s) {
  for (Vertex a : s) {
    // c: a non-neighbor of a inside s, later than a
    VertexSet far = s - g.neighbors(a);
    for (Vertex c = far.next(a); c != -1; c = far.next(c)) {
      VertexSet mid = s & g.neighbors(a) & g.neighbors(c);
      for (Vertex b : mid) {
        VertexSet opp = mid - g.neighbors(b);
        Vertex d = opp.next(b);
        if (d != -1) return std::array<Vertex, 4>{a, b, c, d};
      }
    }
  }
  return std::nullopt;
}

bool is_homomorphism(const Graph& f, const Homomorphism& h) {
  if (h.d < 1 || static_cast<int>(h.map.size()) != f.order()) return false;
  const int m = 3 * h.d - 1;
  for (Vertex x : h.map)
    if (x < 0 || x >= m) return false;
  for (auto [u, v] : f.edges())
    if (!gamma_adjacent(h.d, h.map[u], h.map[v])) return false;
  return true;
}

namespace {

// Variables: source vertices. Values: Gamma_d vertices. The first vertex chosen in each
// connected component is pinned to 0, which loses nothing since Gamma_d is vertex-transitive.
class HomSearch {
 public:
  HomSearch(const Graph& f, const GammaGraph& gamma)
      : f_(f), gamma_(gamma), domain_(f.order(), VertexSet::full(gamma.order())),
        assigned_(f.order(), -1), component_(f.order(), -1) {
    int c = 0;
    for (Vertex s = 0; s < f.order(); ++s) {
      if (component_[s] != -1) continue;
      std::vector<Vertex> stack{s};
      component_[s] = c;
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : f.neighbors(v))
          if (component_[w] == -1) {
            component_[w] = c;
            stack.push_back(w);
          }
      }
      ++c;
    }
    component_started_.assign(c, 0);
  }

  bool run() { return solve(0); }
  const std::vector<Vertex>& assignment() const { return assigned_; }

 private:
  Vertex pick() const {
    Vertex best = -1;
    int best_size = 0;
    int best_deg = -1;
    for (Vertex v = 0; v < f_.order(); ++v) {
      if (assigned_[v] != -1) continue;
      int sz = domain_[v].size();
      int deg = f_.degree(v);
      if (best == -1 || sz < best_size || (sz == best_size && deg > best_deg)) {
        best = v;
        best_size = sz;
        best_deg = deg;
      }
    }
    return best;
  }

  bool solve(int done) {
    if (done == f_.order()) return true;
    Vertex v = pick();
    const int comp = component_[v];
    const bool pin = !component_started_[comp];
    component_started_[comp] = 1;
    VertexSet values = domain_[v];
    if (pin) values = VertexSet(gamma_.order(), {0});
    for (Vertex t : values) {
      std::size_t mark = trail_.size();
      assigned_[v] = t;
      bool ok = true;
      for (Vertex w : f_.neighbors(v)) {
        if (assigned_[w] != -1) continue;
        trail_.emplace_back(w, domain_[w]);
        domain_[w] &= gamma_.graph.neighbors(t);
        if (domain_[w].empty()) {
          ok = false;
          break;
        }
      }
      if (ok && solve(done + 1)) return true;
      while (trail_.size() > mark) {
        domain_[trail_.back().first] = std::move(trail_.back().second);
        trail_.pop_back();
      }
      assigned_[v] = -1;
    }
    if (pin) component_started_[comp] = 0;
    return false;
  }

  const Graph& f_;
  const GammaGraph& gamma_;
  std::vector<VertexSet> domain_;
  std::vector<Vertex> assigned_;
  std::vector<int> component_;
  std::vector<char> component_started_;
  std::vector<std::pair<Vertex, VertexSet>> trail_;
};

}  // namespace

std::optional<Homomorphism> find_homomorphism(const Graph& f, int d) {
  require_d(d);
  if (auto tri = find_triangle(f))
    throw Error(Errc::TriangleInSource, "source graph contains a triangle",
                std::vector<Vertex>(tri->begin(), tri->end()));
  GammaGraph gamma = build_gamma(d);
  HomSearch search(f, gamma);
  if (!search.run()) return std::nullopt;
  Homomorphism h{d, search.assignment()};
  ensure(is_homomorphism(f, h), "homomorphism search produced a non-homomorphism");
  return h;
}

int default_d_max(int n) { return std::max(1, (n + 3) / 3); }

std::optional<Homomorphism> search_gamma_target(const Graph& f, std::optional<int> d_max) {
  const int cap = d_max.value_or(default_d_max(f.order()));
  for (int d = 1; d <= cap; ++d)
    if (auto h = find_homomorphism(f, d)) return h;
  return std::nullopt;
}

Graph blowup_completion(const Graph& f, const Homomorphism& h) {
  if (!is_homomorphism(f, h)) throw Error(Errc::InvalidArgument, "map is not a homomorphism");
  Graph out(f.order());
  for (Vertex u = 0; u < f.order(); ++u)
    for (Vertex v = u + 1; v < f.order(); ++v)
      if (gamma_adjacent(h.d, h.map[u], h.map[v])) out.add_edge(u, v);
  return out;
}

TriColoring blowup_coloring(const Graph& blowup, const Homomorphism& h, const VertexSet& i1) {
  if (blowup_completion(blowup, h) != blowup)
    throw Error(Errc::InvalidArgument, "graph is not the blow-up completion of the map");
  const int n = blowup.order();
  if (i1.universe() != n) throw Error(Errc::InvalidArgument, "I1 universe mismatch");
  if (!is_independent(blowup, i1)) throw Error(Errc::InvalidArgument, "I1 is not independent");
  for (Vertex v = 0; v < n; ++v)
    if (!i1.test(v) && !blowup.neighbors(v).intersects(i1))
      throw Error(Errc::InvalidArgument, "I1 is not maximal", {v});

  const int m = 3 * h.d - 1;
  VertexSet image(m);
  for (Vertex u : i1) image.insert(h.map[u]);

  std::optional<VertexSet> window;
  for (const VertexSet& w : gamma_maximal_independent_sets(h.d)) {
    if (!image.is_subset_of(w)) continue;
    if (!window || w.to_vector() < window->to_vector()) window = w;
  }
  if (!window) throw Error(Errc::WitnessInconsistency, "h(I1) lies in no window");

  auto preimage = [&](const VertexSet& labels) {
    VertexSet s(n);
    for (Vertex u = 0; u < n; ++u)
      if (labels.test(h.map[u])) s.insert(u);
    return s;
  };
  if (preimage(*window) != i1)
    throw Error(Errc::WitnessInconsistency, "preimage of the chosen window differs from I1");

  TriColoring base = gamma_coloring(h.d, *window);
  return TriColoring{{i1, preimage(base.parts[1]), preimage(base.parts[2])}};
}

Blowup gamma_blowup(int d, std::span<const int> sizes) {
  require_d(d);
  const int m = 3 * d - 1;
  if (static_cast<int>(sizes.size()) != m)
    throw Error(Errc::InvalidArgument, "need exactly 3d-1 class sizes");
  Homomorphism h{d, {}};
  for (int c = 0; c < m; ++c) {
    if (sizes[c] < 0) throw Error(Errc::InvalidArgument, "negative class size");
    h.map.insert(h.map.end(), sizes[c], c);
  }
  const int n = static_cast<int>(h.map.size());
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (gamma_adjacent(d, h.map[u], h.map[v])) g.add_edge(u, v);
  return {std::move(g), std::move(h)};
}

}  // namespace a2i
