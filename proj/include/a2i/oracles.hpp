#pragma once

#include <array>
#include <optional>
#include <vector>

#include "a2i/graph.hpp"

namespace a2i {

/// Vertex-disjoint edges of the ambient graph.
struct Matching {
  std::vector<Edge> edges;

  int size() const noexcept { return static_cast<int>(edges.size()); }
};

/// Proper coloring; classes are non-empty, independent, and partition V.
struct Coloring {
  std::vector<VertexSet> classes;

  int size() const noexcept { return static_cast<int>(classes.size()); }
};

/// Lexicographically least triangle (u < v < w), if any.
std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g);

/// True iff the complement is triangle-free.
bool alpha_at_most_2(const Graph& g);

/// Size of a maximum clique. Exponential; intended for n up to about 64.
int clique_number(const Graph& g);

/// A maximum clique; among all maximum cliques the lexicographically least vertex set.
VertexSet max_clique(const Graph& g);

/// Some clique of exactly `size` vertices inside `candidates`, if one exists.
std::optional<VertexSet> find_clique_of_size(const Graph& g, const VertexSet& candidates, int size);

int independence_number(const Graph& g);

/// Maximum-cardinality matching (Edmonds' blossom contraction). Edges reported with u < v,
/// sorted.
Matching max_matching(const Graph& g);

/// chi(g) = n - nu(complement(g)) for graphs with alpha(g) <= 2. Throws AlphaTooLarge.
int chromatic_number_alpha2(const Graph& g);

/// Backtracking k-coloring (saturation order, symmetry-broken). nullopt if none exists.
std::optional<Coloring> is_k_colorable(const Graph& g, int k);

/// Least k with is_k_colorable(g, k). Exponential.
int chromatic_number_backtracking(const Graph& g);

/// Least k <= cap such that complement(g) is k-colorable; nullopt when it exceeds cap.
std::optional<int> clique_cover_number(const Graph& g, int cap);

/// Applicability of the degree-bounded theorems. Thresholds use integer cross-multiplication:
/// thm4 <=> n >= 11 and 29*Delta < 19n - 29; thm5 <=> 3*Delta < 2n - 3 and cover <= 3.
struct GateReport {
  int n = 0;
  int max_degree = 0;
  bool alpha_le_2 = false;
  std::optional<int> clique_cover;  // capped at 3
  bool thm4 = false;
  bool thm5 = false;

  bool applies() const noexcept { return alpha_le_2 && (thm4 || thm5); }
};

GateReport gate_check(const Graph& g);

}  // namespace a2i
