#pragma once

// Slow, obviously-correct reference implementations for small graphs. They only use
// Graph::adjacent and plain loops, never the library's search code.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "a2i/graph.hpp"

namespace bf {

using a2i::Graph;
using a2i::Vertex;

Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
Graph edgeless(int n);
Graph petersen();
Graph disjoint_edges(int k);
// Adjacent iff the cyclic label difference lies in [d, 2d-1] modulo 3d-1.
Graph andrasfai(int d);

bool is_independent_mask(const Graph& g, std::uint32_t mask);
bool is_clique_mask(const Graph& g, std::uint32_t mask);

int alpha(const Graph& g);        // n <= 24
int omega(const Graph& g);        // n <= 24
bool has_triangle(const Graph& g);
int chromatic(const Graph& g);    // plain backtracking, n <= 18
int matching_number(const Graph& g);  // n <= 16
std::vector<std::uint32_t> maximal_independent_sets(const Graph& g);  // n <= 20
bool has_induced_c4(const Graph& g, const std::vector<Vertex>& s);
bool is_cycle5(const Graph& g, const std::array<Vertex, 5>& c);

std::uint32_t mask_of(const std::vector<Vertex>& vs);

}  // namespace bf
