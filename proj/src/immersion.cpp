#include "a2i/immersion.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace a2i {

Immersion clique_immersion(const Graph& g, const VertexSet& members) {
  if (!is_clique(g, members)) throw Error(Errc::InvalidArgument, "branch set is not a clique");
  Immersion im;
  im.n = g.order();
  im.branch = members.to_vector();
  for (std::size_t i = 0; i < im.branch.size(); ++i)
    for (std::size_t j = i + 1; j < im.branch.size(); ++j)
      im.paths[{im.branch[i], im.branch[j]}] = {im.branch[i], im.branch[j]};
  return im;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Schema: return "schema";
    case ViolationKind::MissingPair: return "missing-pair";
    case ViolationKind::EndpointMismatch: return "endpoint-mismatch";
    case ViolationKind::NotAPath: return "not-a-path";
    case ViolationKind::NonEdgeStep: return "non-edge-step";
    case ViolationKind::DuplicateEdge: return "duplicate-edge";
    case ViolationKind::BranchInternalVertex: return "branch-internal-vertex";
    case ViolationKind::EvenPath: return "even-path";
  }
  return "unknown";
}

bool VerificationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "valid: " << (valid ? "true" : "false") << '\n'
      << "strong: " << (strong ? "true" : "false") << '\n'
      << "totally_odd: " << (totally_odd ? "true" : "false") << '\n'
      << "violations: " << violations.size() << '\n';
  for (const auto& v : violations) {
    out << "  " << to_string(v.kind);
    if (v.pair.first != -1) out << " pair={" << v.pair.first << ',' << v.pair.second << '}';
    if (v.other_pair.first != -1)
      out << " other={" << v.other_pair.first << ',' << v.other_pair.second << '}';
    if (v.edge.first != -1) out << " edge=" << v.edge.first << '-' << v.edge.second;
    if (v.vertex != -1) out << " vertex=" << v.vertex;
    if (!v.detail.empty()) out << " (" << v.detail << ')';
    out << '\n';
  }
  return out.str();
}

VerificationReport verify_immersion(const Graph& g, const Immersion& im, bool require_strong,
                                    bool require_totally_odd) {
  VerificationReport r;
  r.strong = true;
  r.totally_odd = true;
  auto add = [&r](Violation v) { r.violations.push_back(std::move(v)); };
  const int n = g.order();
  if (im.n != n)
    add({ViolationKind::Schema, {}, {}, {}, -1,
         "certificate declares n=" + std::to_string(im.n) + ", graph has " + std::to_string(n)});

  std::vector<char> in_branch(n, 0);
  std::vector<Vertex> branch;
  for (Vertex b : im.branch) {
    if (b < 0 || b >= n) {
      add({ViolationKind::Schema, {}, {}, {}, b, "branch vertex out of range"});
      continue;
    }
    if (in_branch[b]) {
      add({ViolationKind::Schema, {}, {}, {}, b, "branch vertex listed twice"});
      continue;
    }
    in_branch[b] = 1;
    branch.push_back(b);
  }
  std::sort(branch.begin(), branch.end());
  auto is_branch = [&](Vertex v) { return v >= 0 && v < n && in_branch[v]; };

  std::map<Edge, VertexPair> owner;
  for (const auto& [pair, path] : im.paths) {
    auto [u, v] = pair;
    if (u >= v || !is_branch(u) || !is_branch(v)) {
      add({ViolationKind::Schema, pair, {}, {}, -1, "path for a pair outside the branch set"});
      continue;
    }
    if (path.size() < 2) {
      add({ViolationKind::Schema, pair, {}, {}, -1, "path has no edges"});
      continue;
    }
    auto bad = std::find_if(path.begin(), path.end(), [n](Vertex x) { return x < 0 || x >= n; });
    if (bad != path.end()) {
      add({ViolationKind::Schema, pair, {}, {}, *bad, "path vertex out of range"});
      continue;
    }
    if (path.front() != u || path.back() != v)
      add({ViolationKind::EndpointMismatch, pair, {}, {path.front(), path.back()}, -1, ""});

    std::set<Vertex> seen;
    for (Vertex x : path)
      if (!seen.insert(x).second) add({ViolationKind::NotAPath, pair, {}, {}, x, "vertex repeats"});

    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      Vertex a = path[i];
      Vertex b = path[i + 1];
      if (a == b || !g.adjacent(a, b)) {
        add({ViolationKind::NonEdgeStep, pair, {}, {a, b}, -1, ""});
        continue;
      }
      Edge e = std::minmax(a, b);
      auto [it, fresh] = owner.emplace(e, pair);
      if (!fresh) add({ViolationKind::DuplicateEdge, pair, it->second, e, -1, ""});
    }

    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (!is_branch(path[i])) continue;
      r.strong = false;
      if (require_strong) add({ViolationKind::BranchInternalVertex, pair, {}, {}, path[i], ""});
    }
    if ((path.size() - 1) % 2 == 0) {
      r.totally_odd = false;
      if (require_totally_odd)
        add({ViolationKind::EvenPath, pair, {}, {}, -1,
             "length " + std::to_string(path.size() - 1)});
    }
  }

  for (std::size_t i = 0; i < branch.size(); ++i)
    for (std::size_t j = i + 1; j < branch.size(); ++j)
      if (!im.paths.contains({branch[i], branch[j]}))
        add({ViolationKind::MissingPair, {branch[i], branch[j]}, {}, {}, -1, ""});

  r.valid = r.violations.empty();
  return r;
}

namespace {

class HallSearch {
 public:
  HallSearch(const Graph& g, const VertexSet& ground)
      : g_(g), ground_(ground), mate_(g.order(), -1), seen_ground_(g.order()), seen_side_(g.order()) {}

  bool augment_from(Vertex s) {
    seen_ground_.clear();
    seen_side_.clear();
    return augment(s);
  }

  const VertexSet& visited_side() const { return seen_side_; }
  const std::vector<Vertex>& mate() const { return mate_; }

 private:
  bool augment(Vertex s) {
    seen_side_.insert(s);
    VertexSet options = co_neighbors(g_, s, ground_);
    for (Vertex t : options) {
      if (seen_ground_.test(t)) continue;
      seen_ground_.insert(t);
      if (mate_[t] == -1 || augment(mate_[t])) {
        mate_[t] = s;
        return true;
      }
    }
    return false;
  }

  const Graph& g_;
  const VertexSet& ground_;
  std::vector<Vertex> mate_;
  VertexSet seen_ground_;
  VertexSet seen_side_;
};

}  // namespace

Matching hall_matching(const Graph& g, const VertexSet& side, const VertexSet& ground) {
  if (side.intersects(ground)) throw Error(Errc::InvalidArgument, "side and ground overlap");
  HallSearch search(g, ground);
  for (Vertex s : side) {
    if (!search.augment_from(s))
      throw Error(Errc::HallViolation, "Hall condition fails", search.visited_side().to_vector());
  }
  Matching m;
  for (Vertex t = 0; t < g.order(); ++t)
    if (search.mate()[t] != -1) m.edges.emplace_back(search.mate()[t], t);
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

Immersion construct_from_clique_coloring(const Graph& g, const TriColoring& coloring) {
  const int n = g.order();
  const VertexSet& d1 = coloring[0];
  const VertexSet& d2 = coloring[1];
  const VertexSet& d3 = coloring[2];
  for (const auto& part : coloring.parts)
    if (part.universe() != n) throw Error(Errc::NotCliquePartition, "part universe mismatch");
  if (d1.intersects(d2) || d1.intersects(d3) || d2.intersects(d3) ||
      (d1 | d2 | d3) != g.vertices())
    throw Error(Errc::NotCliquePartition, "parts do not partition the vertex set");
  for (const auto& part : coloring.parts)
    if (!is_clique(g, part)) throw Error(Errc::NotCliquePartition, "part is not a clique", part.to_vector());

  const VertexSet branch = d2 | d3;
  if (g.is_complete()) return clique_immersion(g, branch);

  if (!alpha_at_most_2(g)) throw Error(Errc::AlphaMismatch, "independence number exceeds 2");
  if (d1.size() != clique_number(g))
    throw Error(Errc::D1NotMaximum, "D1 is not a maximum clique", d1.to_vector());
  if (auto c4 = find_induced_c4(g, branch))
    throw Error(Errc::InducedC4Present, "induced C4 inside D2 u D3",
                std::vector<Vertex>(c4->begin(), c4->end()));

  std::vector<Vertex> rep(n, -1);
  for (const VertexSet* side : {&d2, &d3})
    for (auto [u, r] : hall_matching(g, *side, d1).edges) rep[u] = r;

  Immersion im;
  im.n = n;
  im.branch = branch.to_vector();
  for (std::size_t i = 0; i < im.branch.size(); ++i) {
    for (std::size_t j = i + 1; j < im.branch.size(); ++j) {
      Vertex u = im.branch[i];
      Vertex v = im.branch[j];
      if (g.adjacent(u, v)) {
        im.paths[{u, v}] = {u, v};
        continue;
      }
      Vertex a = d2.test(u) ? u : v;  // D2 side
      Vertex b = a == u ? v : u;      // D3 side
      ensure(d2.test(a) && d3.test(b), "non-adjacent pair inside a clique part", {u, v});
      const Vertex ra = rep[a];
      const Vertex rb = rep[b];
      ensure(ra != rb, "representatives coincide on a non-adjacent pair", {a, b});
      ensure(g.adjacent(a, rb) && g.adjacent(b, ra) && g.adjacent(ra, rb),
             "representative adjacency fails", {a, b, ra, rb});
      Path p{a, rb, ra, b};
      if (a > b) std::reverse(p.begin(), p.end());
      im.paths[{u, v}] = std::move(p);
    }
  }

  auto report = verify_immersion(g, im, true, true);
  ensure(report.valid, "constructed immersion failed verification");
  return im;
}

namespace {

void check_collisions(const Immersion& im) {
  std::set<Edge> used;
  for (const auto& [pair, path] : im.paths)
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      Edge e = std::minmax(path[i], path[i + 1]);
      if (!used.insert(e).second)
        throw Error(Errc::EdgeCollision, "two paths share an edge", {e.first, e.second});
    }
}

}  // namespace

Immersion join_immersions(const Graph& g, const Immersion& a, const Immersion& b) {
  if (a.n != g.order() || b.n != g.order())
    throw Error(Errc::InvalidArgument, "immersion vertex count mismatch");
  for (Vertex x : a.branch)
    if (std::binary_search(b.branch.begin(), b.branch.end(), x))
      throw Error(Errc::InvalidArgument, "branch sets overlap", {x});
  Immersion out;
  out.n = g.order();
  out.paths = a.paths;
  out.paths.insert(b.paths.begin(), b.paths.end());
  for (Vertex x : a.branch)
    for (Vertex y : b.branch) {
      if (!g.adjacent(x, y)) throw Error(Errc::MissingCrossEdge, "join edge missing", {x, y});
      auto key = make_pair_key(x, y);
      out.paths[key] = {key.first, key.second};
    }
  std::merge(a.branch.begin(), a.branch.end(), b.branch.begin(), b.branch.end(),
             std::back_inserter(out.branch));
  check_collisions(out);
  return out;
}

Immersion branch_restrict(const Immersion& im, const VertexSet& target) {
  for (Vertex v : target)
    if (!std::binary_search(im.branch.begin(), im.branch.end(), v))
      throw Error(Errc::NotSubset, "target vertex is not a branch vertex", {v});
  Immersion out;
  out.n = im.n;
  out.branch = target.to_vector();
  for (const auto& [pair, path] : im.paths)
    if (target.test(pair.first) && target.test(pair.second)) out.paths.emplace(pair, path);
  return out;
}

Immersion lift_immersion(const Immersion& im, const std::vector<Vertex>& to_parent, int n_parent) {
  Immersion out;
  out.n = n_parent;
  for (Vertex b : im.branch) out.branch.push_back(to_parent.at(b));
  std::sort(out.branch.begin(), out.branch.end());
  for (const auto& [pair, path] : im.paths) {
    Path p;
    p.reserve(path.size());
    for (Vertex x : path) p.push_back(to_parent.at(x));
    auto key = make_pair_key(to_parent.at(pair.first), to_parent.at(pair.second));
    if (!p.empty() && p.front() != key.first) std::reverse(p.begin(), p.end());
    out.paths[key] = std::move(p);
  }
  return out;
}

}  // namespace a2i
