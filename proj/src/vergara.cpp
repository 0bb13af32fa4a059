#include "a2i/vergara.hpp"

#include <string>

namespace a2i {

CriticalReduction critical_reduction(const Graph& g) {
  const int k = chromatic_number_alpha2(g);
  VertexSet keep = g.vertices();
  VertexSet removed = g.empty_set();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v : keep) {
      VertexSet trial = keep;
      trial.erase(v);
      if (chromatic_number_alpha2(induced_subgraph(g, trial).graph) == k) {
        keep = trial;
        removed.insert(v);
        changed = true;
        break;
      }
    }
  }
  return {induced_subgraph(g, keep), removed};
}

std::vector<VertexSet> join_decomposition(const Graph& g) {
  std::vector<VertexSet> parts;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    Vertex s = left.first();
    VertexSet comp(g.order(), {s});
    left.erase(s);
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      VertexSet fresh = left - g.neighbors(v);
      for (Vertex w : fresh) {
        comp.insert(w);
        left.erase(w);
        stack.push_back(w);
      }
    }
    parts.push_back(comp);
  }
  return parts;
}

namespace {

using nlohmann::json;

std::vector<Vertex> relabel(const VertexSet& s, const std::vector<Vertex>& to_orig) {
  std::vector<Vertex> out;
  for (Vertex v : s) out.push_back(to_orig[v]);
  return out;
}

std::vector<Vertex> compose(const std::vector<Vertex>& outer, const std::vector<Vertex>& inner) {
  std::vector<Vertex> out;
  for (Vertex v : inner) out.push_back(outer[v]);
  return out;
}

VertexSet first_k(const VertexSet& s, int k) {
  VertexSet out(s.universe());
  for (Vertex v : s) {
    if (out.size() == k) break;
    out.insert(v);
  }
  return out;
}

// Runs the reduction / join / Gamma_d pipeline. When `replay` is set, the nondeterministic
// choices (removed vertices, homomorphisms) are read from it and every deterministic step is
// compared against the recording.
class Pipeline {
 public:
  Pipeline(int top_n, std::optional<int> d_max, const json* replay)
      : d_max_(d_max.value_or(default_d_max(top_n))), replay_(replay) {}

  Immersion solve(const Graph& g, const std::vector<Vertex>& to_orig) {
    const int k = chromatic_number_alpha2(g);

    VertexSet removed(g.order());
    if (replay_) {
      const json& s = take("critical_reduction", to_orig);
      for (Vertex x : s.at("removed").get<std::vector<Vertex>>()) removed.insert(local(to_orig, x));
    } else {
      removed = critical_reduction(g).removed;
      steps.push_back({{"step", "critical_reduction"}, {"part", to_orig},
                       {"removed", relabel(removed, to_orig)}, {"chi", k}});
    }
    InducedSubgraph red = induced_subgraph(g, g.vertices() - removed);
    const Graph& r = red.graph;
    const std::vector<Vertex> r_orig = compose(to_orig, red.to_parent);
    if (replay_ && chromatic_number_alpha2(r) != k)
      throw Error(Errc::InvalidArgument, "trace removes vertices that change the chromatic number");

    std::vector<VertexSet> parts = join_decomposition(r);
    json parts_json = json::array();
    for (const VertexSet& p : parts) parts_json.push_back(relabel(p, r_orig));
    emit({{"step", "join"}, {"part", r_orig}, {"parts", parts_json}});

    Immersion im;
    im.n = r.order();
    if (parts.size() > 1) {
      for (const VertexSet& p : parts) {
        InducedSubgraph sub = induced_subgraph(r, p);
        Immersion piece = solve(sub.graph, compose(r_orig, sub.to_parent));
        im = join_immersions(r, im, lift_immersion(piece, sub.to_parent, r.order()));
      }
    } else if (parts.size() == 1) {
      im = leaf(r, r_orig, k);
    }
    return lift_immersion(im, red.to_parent, g.order());
  }

  json steps = json::array();

 private:
  // r is vertex-critical with a connected complement.
  Immersion leaf(const Graph& r, const std::vector<Vertex>& r_orig, int k) {
    const int n = r.order();
    if (n < 2 * k - 1) throw Error(Errc::InternalAssertion, "critical graph below the Gallai bound");
    const Graph co = complement(r);

    Homomorphism h;
    if (replay_) {
      const json& s = take("gamma_target", r_orig);
      h.d = s.at("d").get<int>();
      h.map = s.at("map").get<std::vector<Vertex>>();
      if (!is_homomorphism(co, h))
        throw Error(Errc::InvalidArgument, "trace map is not a homomorphism of the complement");
    } else {
      auto found = search_gamma_target(co, d_max_);
      if (!found)
        throw Error(Errc::GammaTargetNotFound,
                    "complement has no homomorphism into Gamma_d for d <= " + std::to_string(d_max_),
                    r_orig);
      h = *found;
      steps.push_back({{"step", "gamma_target"}, {"part", r_orig}, {"d", h.d}, {"map", h.map}});
    }

    const Graph blowup = blowup_completion(co, h);
    const Graph gp = complement(blowup);
    const VertexSet i1 = max_clique(gp);
    const bool shortcut = i1.size() >= k;
    emit({{"step", "independent_set"}, {"part", r_orig}, {"i1", relabel(i1, r_orig)}, {"k", k},
          {"shortcut", shortcut}});

    if (shortcut) return clique_immersion(r, first_k(i1, k));

    TriColoring tri = blowup_coloring(blowup, h, i1);
    Immersion full = construct_from_clique_coloring(gp, tri);
    VertexSet target = first_k(tri[1] | tri[2], k);
    ensure(target.size() == k, "coloring branch set smaller than chi", r_orig);
    emit({{"step", "clique_coloring"}, {"part", r_orig}, {"d2", relabel(tri[1], r_orig)},
          {"d3", relabel(tri[2], r_orig)}, {"branch", relabel(target, r_orig)}});
    return branch_restrict(full, target);
  }

  const json& take(std::string_view kind, const std::vector<Vertex>& part) {
    if (cursor_ >= replay_->size())
      throw Error(Errc::InvalidArgument, "trace ended early");
    const json& s = (*replay_)[cursor_++];
    if (s.at("step").get<std::string>() != kind || s.at("part").get<std::vector<Vertex>>() != part)
      throw Error(Errc::InvalidArgument, "trace step does not match the pipeline: expected " +
                                             std::string(kind) + " at step " +
                                             std::to_string(cursor_ - 1));
    return s;
  }

  void emit(json step) {
    if (!replay_) {
      steps.push_back(std::move(step));
      return;
    }
    const json& s = take(step.at("step").get<std::string>(), step.at("part").get<std::vector<Vertex>>());
    if (s != step)
      throw Error(Errc::InvalidArgument, "trace disagrees with recomputed step " +
                                             step.at("step").get<std::string>());
  }

  static Vertex local(const std::vector<Vertex>& to_orig, Vertex x) {
    for (std::size_t i = 0; i < to_orig.size(); ++i)
      if (to_orig[i] == x) return static_cast<Vertex>(i);
    throw Error(Errc::InvalidArgument, "trace vertex outside the current part", {x});
  }

  int d_max_;
  const json* replay_;
  std::size_t cursor_ = 0;

 public:
  std::size_t consumed() const { return cursor_; }
};

std::vector<Vertex> identity(int n) {
  std::vector<Vertex> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  return id;
}

void final_check(const Graph& g, const Immersion& im, int k) {
  auto report = verify_immersion(g, im, true, true);
  ensure(report.valid, "pipeline produced an invalid immersion");
  ensure(static_cast<int>(im.branch.size()) == k, "branch set size differs from chi");
}

}  // namespace

ChiImmersion construct_chi_immersion(const Graph& g, std::optional<int> d_max) {
  if (d_max && *d_max < 1) throw Error(Errc::InvalidArgument, "d_max must be positive");
  ChiImmersion out;
  out.chromatic_number = chromatic_number_alpha2(g);
  Pipeline p(g.order(), d_max, nullptr);
  out.immersion = p.solve(g, identity(g.order()));
  final_check(g, out.immersion, out.chromatic_number);
  out.trace.steps = std::move(p.steps);
  return out;
}

Immersion replay_chi_immersion(const Graph& g, const PipelineTrace& trace) {
  if (!trace.steps.is_array()) throw Error(Errc::InvalidArgument, "trace must be an array of steps");
  const int k = chromatic_number_alpha2(g);
  Pipeline p(g.order(), std::nullopt, &trace.steps);
  Immersion im;
  try {
    im = p.solve(g, identity(g.order()));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed trace: ") + e.what());
  }
  if (p.consumed() != trace.steps.size()) throw Error(Errc::InvalidArgument, "trace has extra steps");
  final_check(g, im, k);
  return im;
}

}  // namespace a2i
