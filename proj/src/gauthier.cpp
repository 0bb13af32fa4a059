#include "a2i/gauthier.hpp"

#include <algorithm>
#include <string>

namespace a2i {

EdgeReduction edge_minimal_reduction(const Graph& g) {
  if (!alpha_at_most_2(g)) throw Error(Errc::AlphaTooLarge, "independence number exceeds 2");
  // Deleting an edge only shrinks neighborhoods, so an edge that was kept stays unremovable
  // and one pass in lexicographic order already reaches the fixpoint.
  EdgeReduction out{g, {}};
  Graph& h = out.graph;
  const VertexSet all = h.vertices();
  for (auto [u, v] : g.edges()) {
    VertexSet outside = all - h.neighbors(u) - h.neighbors(v);
    if (outside.empty()) {
      h.remove_edge(u, v);
      out.removed.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

bool is_induced_c5(const Graph& g, const Cycle5& c) {
  for (int i = 0; i < 5; ++i) {
    if (!g.adjacent(c[i], c[(i + 1) % 5])) return false;
    if (g.adjacent(c[i], c[(i + 2) % 5])) return false;
  }
  return true;
}

// Shortest path a -> b, first-discovered parents, neighbors ascending.
Path shortest_path(const Graph& g, Vertex a, Vertex b) {
  std::vector<Vertex> parent(g.order(), -1);
  std::vector<Vertex> queue{a};
  parent[a] = a;
  for (std::size_t head = 0; head < queue.size() && parent[b] == -1; ++head)
    for (Vertex w : g.neighbors(queue[head]))
      if (parent[w] == -1) {
        parent[w] = queue[head];
        queue.push_back(w);
      }
  if (parent[b] == -1) return {};
  Path p{b};
  while (p.back() != a) p.push_back(parent[p.back()]);
  std::reverse(p.begin(), p.end());
  return p;
}

Vertex least_common_non_neighbor(const Graph& g, Vertex a, Vertex b) {
  VertexSet s = g.vertices() - g.neighbors(a) - g.neighbors(b);
  s.erase(a);
  s.erase(b);
  return s.first();
}

}  // namespace

Cycle5 find_induced_c5(const Graph& g) {
  if (g.is_complete()) throw Error(Errc::Complete, "graph is complete");
  Path p;
  for (Vertex a = 0; a < g.order() && p.empty(); ++a) {
    VertexSet far = g.vertices() - g.neighbors(a);
    for (Vertex b = far.next(a); b != -1 && p.empty(); b = far.next(b)) p = shortest_path(g, a, b);
  }
  if (p.empty()) throw Error(Errc::NotMinimal, "no connected non-adjacent pair");
  const Vertex v1 = p[0], v2 = p[1], v3 = p[2];
  const Vertex v4 = least_common_non_neighbor(g, v1, v2);
  if (v4 == -1) throw Error(Errc::NotMinimal, "edge v1v2 is removable", {v1, v2});
  const Vertex v5 = least_common_non_neighbor(g, v2, v3);
  if (v5 == -1) throw Error(Errc::NotMinimal, "edge v2v3 is removable", {v2, v3});
  Cycle5 c{v1, v2, v3, v4, v5};
  if (!is_induced_c5(g, c))
    throw Error(Errc::NotMinimal, "witnesses do not close an induced 5-cycle",
                std::vector<Vertex>(c.begin(), c.end()));
  return c;
}

WindowPartition partition_windows(const Graph& g, const Cycle5& c, const VertexSet& inherited) {
  if (!is_induced_c5(g, c)) throw Error(Errc::InvalidArgument, "not an induced 5-cycle");
  std::array<VertexSet, 5> z;
  z.fill(g.empty_set());
  VertexSet rest = g.vertices() - inherited;
  for (Vertex v : c) rest.erase(v);
  for (Vertex u : rest) {
    int slot = -1;
    for (int i = 0; i < 5 && slot == -1; ++i)
      if (g.adjacent(u, c[(i + 4) % 5]) && g.adjacent(u, c[i]) && g.adjacent(u, c[(i + 1) % 5]))
        slot = i;
    if (slot == -1)
      throw Error(Errc::Claim1Violation, "vertex sees no three consecutive cycle vertices", {u});
    z[slot].insert(u);
  }
  int best = 0;
  for (int s = 1; s < 5; ++s)
    if (z[(1 + s) % 5].size() < z[(1 + best) % 5].size()) best = s;
  WindowPartition out;
  out.rotation = best;
  for (int j = 0; j < 5; ++j) {
    out.cycle[j] = c[(j + best) % 5];
    out.windows[j] = z[(j + best) % 5];
  }
  return out;
}

namespace {

VertexSet take_ascending(const VertexSet& from, int count, VertexSet into) {
  for (Vertex v : from) {
    if (into.size() == count) break;
    into.insert(v);
  }
  return into;
}

}  // namespace

std::pair<VertexSet, VertexSet> select_xy(const GauthierFrame& f, const Graph& g) {
  const VertexSet& z2 = f.windows[1];
  const int t = f.t;
  if (f.y1_plus.size() < t + f.x1.size() || f.y3_plus.size() < t + f.x3.size())
    throw Error(Errc::SelectionInfeasible, "|Y_i+| < t + |X_i|");

  const VertexSet pool1 = f.y1_plus - z2;
  const int need1 = f.x1.size();
  VertexSet y1 = take_ascending(pool1 - f.y3_plus, need1, VertexSet(g.order()));
  y1 = take_ascending(pool1 & f.y3_plus, need1, y1);
  if (y1.size() < need1) throw Error(Errc::SelectionInfeasible, "Y1+ minus Z2 too small for X1");

  const VertexSet pool3 = f.y3_plus - z2 - y1;
  if (pool3.size() < f.x3.size())
    throw Error(Errc::SelectionInfeasible, "Y3+ minus Z2 and Y1 too small for X3");
  VertexSet y3 = take_ascending(pool3, f.x3.size(), VertexSet(g.order()));

  for (Vertex y : y1) ensure(g.adjacent(y, f.cycle[0]), "Y1 vertex misses v1", {y});
  for (Vertex y : y3) ensure(g.adjacent(y, f.cycle[2]), "Y3 vertex misses v3", {y});
  return {y1, y3};
}

namespace {

using nlohmann::json;

void add_path(Immersion& im, Path p) {
  auto key = make_pair_key(p.front(), p.back());
  if (p.front() != key.first) std::reverse(p.begin(), p.end());
  ensure(im.paths.emplace(key, std::move(p)).second, "pair routed twice", {key.first, key.second});
}

std::vector<Vertex> compose(const std::vector<Vertex>& outer, const std::vector<Vertex>& inner) {
  std::vector<Vertex> out;
  for (Vertex v : inner) out.push_back(outer[v]);
  return out;
}

class TwoFifths {
 public:
  explicit TwoFifths(int top_n) : top_n_(top_n) {}

  Immersion solve(const Graph& g, const std::vector<Vertex>& to_orig, int depth) {
    const int n = g.order();
    if (n <= 9) {
      Immersion im;
      im.n = n;
      if (n >= 5) {
        auto edges = g.edges();
        ensure(!edges.empty(), "edgeless graph on five or more vertices");
        im = clique_immersion(g, VertexSet(n, {edges[0].first, edges[0].second}));
      }
      trace.push_back({{"depth", depth}, {"n", n}, {"base", lift(im.branch, to_orig)}});
      return im;
    }

    // Trim to n = 5t, dropping the lowest degrees.
    std::vector<Vertex> by_degree(n);
    for (Vertex v = 0; v < n; ++v) by_degree[v] = v;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    VertexSet keep = g.vertices();
    std::vector<Vertex> trimmed;
    for (int i = 0; i < n % 5; ++i) {
      keep.erase(by_degree[i]);
      trimmed.push_back(to_orig[by_degree[i]]);
    }
    std::sort(trimmed.begin(), trimmed.end());
    InducedSubgraph tr = induced_subgraph(g, keep);
    const std::vector<Vertex> orig = compose(to_orig, tr.to_parent);
    const int t = tr.graph.order() / 5;

    EdgeReduction red = edge_minimal_reduction(tr.graph);
    const Graph& h = red.graph;
    const std::size_t slot = trace.size();
    trace.push_back({{"depth", depth}, {"n", n}, {"t", t}, {"trimmed", trimmed},
                     {"removed_edges", red.removed.size()}});

    for (Vertex u = 0; u < h.order(); ++u) {
      VertexSet co = h.vertices() - h.neighbors(u);
      co.erase(u);
      if (co.size() < 2 * t) continue;
      VertexSet b = take_ascending(co, 2 * t, h.empty_set());
      ensure(is_clique(h, b), "co-neighborhood is not a clique", lift(b.to_vector(), orig));
      trace[slot]["shortcut"] = {{"vertex", orig[u]}, {"branch", lift(b.to_vector(), orig)}};
      return lift_immersion(clique_immersion(h, b), tr.to_parent, n);
    }

    const Cycle5 c0 = find_induced_c5(h);
    VertexSet cset(h.order(), std::span<const Vertex>(c0));
    InducedSubgraph sub = induced_subgraph(h, h.vertices() - cset);
    Immersion inner = lift_immersion(solve(sub.graph, compose(orig, sub.to_parent), depth + 1),
                                     sub.to_parent, h.order());

    GauthierFrame f;
    f.t = t;
    f.branch = VertexSet(h.order(), std::span<const Vertex>(inner.branch));
    ensure(f.branch.size() == 2 * t - 2, "inner branch set has the wrong size");
    WindowPartition wp = partition_windows(h, c0, f.branch);
    f.cycle = wp.cycle;
    f.rotation = wp.rotation;
    f.windows = wp.windows;
    const Vertex v1 = f.cycle[0], v3 = f.cycle[2];
    if (5 * f.windows[1].size() > 3 * (t - 1))
      throw Error(Errc::InternalAssertion, "window bound 5|Z2| <= 3(t-1) fails",
                  lift(f.windows[1].to_vector(), orig));

    f.x1 = f.branch - h.neighbors(v1);
    f.x3 = f.branch - h.neighbors(v3);
    ensure(!f.x1.intersects(f.x3), "X1 and X3 intersect", lift((f.x1 & f.x3).to_vector(), orig));
    const VertexSet outside = h.vertices() - f.branch - cset;
    f.y1_plus = h.neighbors(v1) - f.branch - cset;
    f.y3_plus = h.neighbors(v3) - f.branch - cset;
    ensure((f.y1_plus | f.y3_plus) == outside, "Y1+ and Y3+ do not cover the rest");
    std::tie(f.y1, f.y3) = select_xy(f, h);

    Immersion im = inner;
    im.n = h.order();
    auto route = [&](Vertex hub, const VertexSet& xs, const VertexSet& ys) {
      for (Vertex x : f.branch - xs) add_path(im, {hub, x});
      auto xv = xs.to_vector();
      auto yv = ys.to_vector();
      for (std::size_t i = 0; i < xv.size(); ++i) {
        Vertex common = -1;
        for (int j : {1, 3, 4})
          if (h.adjacent(f.cycle[j], xv[i]) && h.adjacent(f.cycle[j], yv[i])) {
            common = f.cycle[j];
            break;
          }
        ensure(common != -1, "no common cycle neighbor", lift(std::vector<Vertex>{xv[i], yv[i]}, orig));
        f.commons.push_back({xv[i], yv[i], common});
        add_path(im, {hub, yv[i], common, xv[i]});
      }
    };
    route(v1, f.x1, f.y1);
    route(v3, f.x3, f.y3);
    add_path(im, {v1, f.cycle[4], f.cycle[3], v3});
    im.branch = inner.branch;
    im.branch.push_back(v1);
    im.branch.push_back(v3);
    std::sort(im.branch.begin(), im.branch.end());

    auto report = verify_immersion(h, im, true, true);
    ensure(report.valid, "frame immersion failed verification");
    ensure(static_cast<int>(im.branch.size()) == 2 * t, "frame branch set has the wrong size");

    json& fj = trace[slot];
    fj["cycle"] = lift(std::vector<Vertex>(f.cycle.begin(), f.cycle.end()), orig);
    fj["rotation"] = f.rotation;
    fj["windows"] = json::array();
    for (const VertexSet& z : f.windows) fj["windows"].push_back(lift(z.to_vector(), orig));
    fj["x1"] = lift(f.x1.to_vector(), orig);
    fj["x3"] = lift(f.x3.to_vector(), orig);
    fj["y1"] = lift(f.y1.to_vector(), orig);
    fj["y3"] = lift(f.y3.to_vector(), orig);
    fj["commons"] = json::array();
    for (auto [x, y, cv] : f.commons) fj["commons"].push_back({orig[x], orig[y], orig[cv]});
    frames.push_back(to_input_labels(f, orig));

    return lift_immersion(im, tr.to_parent, n);
  }

  json trace = json::array();
  std::vector<GauthierFrame> frames;

 private:
  static std::vector<Vertex> lift(const std::vector<Vertex>& vs, const std::vector<Vertex>& orig) {
    std::vector<Vertex> out;
    for (Vertex v : vs) out.push_back(orig[v]);
    return out;
  }

  VertexSet lift_set(const VertexSet& s, const std::vector<Vertex>& orig) const {
    VertexSet out(top_n_);
    for (Vertex v : s) out.insert(orig[v]);
    return out;
  }

  GauthierFrame to_input_labels(const GauthierFrame& f, const std::vector<Vertex>& orig) const {
    GauthierFrame o;
    o.t = f.t;
    o.rotation = f.rotation;
    for (int i = 0; i < 5; ++i) {
      o.cycle[i] = orig[f.cycle[i]];
      o.windows[i] = lift_set(f.windows[i], orig);
    }
    o.branch = lift_set(f.branch, orig);
    o.x1 = lift_set(f.x1, orig);
    o.x3 = lift_set(f.x3, orig);
    o.y1_plus = lift_set(f.y1_plus, orig);
    o.y3_plus = lift_set(f.y3_plus, orig);
    o.y1 = lift_set(f.y1, orig);
    o.y3 = lift_set(f.y3, orig);
    for (auto [x, y, c] : f.commons) o.commons.push_back({orig[x], orig[y], orig[c]});
    return o;
  }

  int top_n_;
};

}  // namespace

TwoFifthsImmersion construct_2n5_immersion(const Graph& g) {
  if (!alpha_at_most_2(g)) throw Error(Errc::AlphaTooLarge, "independence number exceeds 2");
  std::vector<Vertex> id(g.order());
  for (int i = 0; i < g.order(); ++i) id[i] = i;
  TwoFifths run(g.order());
  TwoFifthsImmersion out;
  out.immersion = run.solve(g, id, 0);
  auto report = verify_immersion(g, out.immersion, true, true);
  ensure(report.valid, "2n/5 immersion failed verification");
  ensure(static_cast<int>(out.immersion.branch.size()) == 2 * (g.order() / 5),
         "2n/5 branch set has the wrong size");
  out.trace = std::move(run.trace);
  out.frames = std::move(run.frames);
  return out;
}

}  // namespace a2i
