#pragma once

#include <array>
#include <utility>
#include <vector>

#include <json.hpp>

#include "a2i/immersion.hpp"

namespace a2i {

using Cycle5 = std::array<Vertex, 5>;

/// State of one level of the 2n/5 recursion. Index i of `cycle` and `windows` is v_{i+1} and
/// Z_{i+1}; so v1 = cycle[0], v3 = cycle[2] and the small window Z_2 = windows[1].
struct GauthierFrame {
  int t = 0;
  Cycle5 cycle{};
  int rotation = 0;
  VertexSet branch;  // I, inherited from the level below
  std::array<VertexSet, 5> windows;
  VertexSet x1, x3;
  VertexSet y1_plus, y3_plus;
  VertexSet y1, y3;
  std::vector<std::array<Vertex, 3>> commons;  // (x, y, common neighbor on the cycle)
};

struct EdgeReduction {
  Graph graph;
  std::vector<Edge> removed;
};

/// Drops every edge whose removal keeps alpha <= 2, scanning edges lexicographically.
EdgeReduction edge_minimal_reduction(const Graph& g);

/// Induced 5-cycle v1..v5 of an edge-minimal alpha-2 graph: the start of a shortest path
/// between non-adjacent vertices, closed by least-index witnesses v4 and v5.
/// Throws Complete, or NotMinimal when a witness is missing.
Cycle5 find_induced_c5(const Graph& g);

struct WindowPartition {
  std::array<VertexSet, 5> windows;
  Cycle5 cycle{};  // rotated
  int rotation = 0;  // new v_j is old v_{j+rotation}
};

/// Puts every vertex outside I and C into the least window Z_i whose three cycle vertices
/// v_{i-1}, v_i, v_{i+1} it sees, then rotates so a smallest window sits at Z_2 (least
/// rotation on ties). Throws Claim1Violation naming a vertex that fits no window.
WindowPartition partition_windows(const Graph& g, const Cycle5& c, const VertexSet& inherited);

/// Y1 from Y1+ minus Z2, preferring vertices outside Y3+, then Y3 from what is left of Y3+,
/// both ascending. Throws SelectionInfeasible when the counting bounds fail.
std::pair<VertexSet, VertexSet> select_xy(const GauthierFrame& frame, const Graph& g);

struct TwoFifthsImmersion {
  Immersion immersion;
  nlohmann::json trace = nlohmann::json::array();
  std::vector<GauthierFrame> frames;  // in the input's labels, innermost first
};

/// Strong, totally odd immersion of K_{2 floor(n/5)} in any graph with alpha <= 2.
TwoFifthsImmersion construct_2n5_immersion(const Graph& g);

}  // namespace a2i
