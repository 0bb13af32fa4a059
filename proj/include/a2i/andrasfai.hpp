#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "a2i/graph.hpp"

namespace a2i {

/// Andrasfai graph on 3d-1 vertices. Internal vertex i stands for label i+1 of the usual
/// 1-based presentation; i ~ j iff (j - i) mod (3d-1) lies in [d, 2d-1].
struct GammaGraph {
  int d = 0;
  Graph graph;

  int order() const noexcept { return 3 * d - 1; }
};

GammaGraph build_gamma(int d);

/// The d cyclically consecutive vertices start, start+1, ..., start+d-1 (mod 3d-1).
VertexSet gamma_window(int d, int start);

/// The 3d-1 maximal independent sets of Gamma_d (the windows), by start vertex.
std::vector<VertexSet> gamma_maximal_independent_sets(int d);

/// Ordered 3-coloring (P1, P2, P3); each part independent, together a partition.
struct TriColoring {
  std::array<VertexSet, 3> parts;

  const VertexSet& operator[](int i) const { return parts[i]; }
};

/// The rotated coloring with D1 = window, D2 the next d vertices, D3 the remaining d-1.
/// Throws NotWindow when d1 is not a window.
TriColoring gamma_coloring(int d, const VertexSet& d1);

/// An induced 4-cycle a-b-c-d-a inside g[s], if any.
std::optional<std::array<Vertex, 4>> find_induced_c4(const Graph& g, const VertexSet& s);

/// Edge-preserving map into Gamma_d.
struct Homomorphism {
  int d = 0;
  std::vector<Vertex> map;

  Vertex operator()(Vertex u) const { return map[u]; }
};

bool is_homomorphism(const Graph& f, const Homomorphism& h);

/// Exact backtracking search with forward checking. Throws TriangleInSource.
std::optional<Homomorphism> find_homomorphism(const Graph& f, int d);

/// Default search bound ceil((n+1)/3).
int default_d_max(int n);

/// Least d <= d_max admitting a homomorphism, with its witness.
std::optional<Homomorphism> search_gamma_target(const Graph& f, std::optional<int> d_max = {});

/// The maximal supergraph of f compatible with h: uv is an edge iff h(u)h(v) is.
Graph blowup_completion(const Graph& f, const Homomorphism& h);

/// Coloring (I1, h^-1(D2), h^-1(D3)) of the blow-up completion H, where D1 is the least
/// window containing h(I1). I1 must be a maximal independent set of H.
TriColoring blowup_coloring(const Graph& blowup, const Homomorphism& h, const VertexSet& i1);

/// Blow-up of Gamma_d with class sizes sizes[0..3d-2]; class i occupies a contiguous block of
/// vertices in class order. Returns the graph together with its class map.
struct Blowup {
  Graph graph;
  Homomorphism classes;
};

Blowup gamma_blowup(int d, std::span<const int> sizes);

}  // namespace a2i
