#pragma once

#include <map>
#include <string>
#include <vector>

#include "a2i/andrasfai.hpp"
#include "a2i/graph.hpp"
#include "a2i/oracles.hpp"

namespace a2i {

/// Unordered branch pair stored as (u, v) with u < v.
using VertexPair = std::pair<Vertex, Vertex>;

inline VertexPair make_pair_key(Vertex a, Vertex b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }

/// Clique immersion certificate: branch set plus one path per branch pair, oriented u -> v.
struct Immersion {
  int n = 0;
  std::vector<Vertex> branch;  // sorted ascending
  std::map<VertexPair, Path> paths;

  friend bool operator==(const Immersion&, const Immersion&) = default;
};

/// Clique immersion on `members` of g using single-edge paths only; members must be a clique.
Immersion clique_immersion(const Graph& g, const VertexSet& members);

enum class ViolationKind {
  Schema,
  MissingPair,
  EndpointMismatch,
  NotAPath,
  NonEdgeStep,
  DuplicateEdge,
  BranchInternalVertex,
  EvenPath,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  VertexPair pair{-1, -1};        // owning pair, when applicable
  VertexPair other_pair{-1, -1};  // second owner for DuplicateEdge
  Edge edge{-1, -1};              // offending edge/step
  Vertex vertex = -1;             // offending vertex
  std::string detail;
};

struct VerificationReport {
  bool valid = false;
  bool strong = false;
  bool totally_odd = false;
  std::vector<Violation> violations;

  bool has(ViolationKind kind) const;
  std::string to_text() const;
};

/// Checks every structural property and lists all findings. Strongness and parity are always
/// measured; they produce violations only when required.
VerificationReport verify_immersion(const Graph& g, const Immersion& im, bool require_strong,
                                    bool require_totally_odd);

/// Matching of `side` into `ground` using non-edges of g (edges of the complement), saturating
/// side. Augmenting paths scan both sides ascending. Throws HallViolation with a witness
/// C subset of side whose co-neighborhood in ground is smaller than C.
Matching hall_matching(const Graph& g, const VertexSet& side, const VertexSet& ground);

/// Immersion with branch set D2 u D3 from a 3-clique coloring with D1 maximum and g[D2 u D3]
/// free of induced C4. Non-adjacent pairs u in D2, v in D3 are routed <u, r_v, r_u, v>.
Immersion construct_from_clique_coloring(const Graph& g, const TriColoring& coloring);

/// Union over a complete join: cross pairs become single edges.
Immersion join_immersions(const Graph& g, const Immersion& a, const Immersion& b);

/// Keeps the paths among `target`, which must be a subset of the branch set.
Immersion branch_restrict(const Immersion& im, const VertexSet& target);

/// Rewrites vertex labels through to_parent into a graph on n_parent vertices.
Immersion lift_immersion(const Immersion& im, const std::vector<Vertex>& to_parent, int n_parent);

}  // namespace a2i
