#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "a2i/vertex_set.hpp"

namespace a2i {

using Edge = std::pair<Vertex, Vertex>;
/// Ordered vertex sequence; consecutive entries adjacent in the ambient graph.
using Path = std::vector<Vertex>;

/// Undirected simple graph on 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  int edge_count() const noexcept { return edges_; }

  /// Throws InvalidArgument on self-loops or out-of-range endpoints; idempotent otherwise.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const noexcept { return adj_[u].test(v); }

  const VertexSet& neighbors(Vertex u) const { return adj_.at(u); }
  int degree(Vertex u) const { return adj_.at(u).size(); }
  int max_degree() const;
  int min_degree() const;
  bool is_complete() const;

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adj_;
  int edges_ = 0;
};

/// Reads the "n m" + m lines of "u v" edge-list format. '#' lines and blank lines are skipped.
Graph parse_graph(std::string_view text);
/// Canonical edge-list document, edges u < v in lexicographic order, no trailing newline.
std::string serialize_graph(const Graph& g);

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// to_parent[i] is the vertex of the parent graph relabeled to i.
  std::vector<Vertex> to_parent;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Members of x other than u that are not adjacent to u.
VertexSet co_neighbors(const Graph& g, Vertex u, const VertexSet& x);

enum class SetMode { Clique, Independent };

bool check_set(const Graph& g, const VertexSet& s, SetMode mode);
inline bool is_clique(const Graph& g, const VertexSet& s) { return check_set(g, s, SetMode::Clique); }
inline bool is_independent(const Graph& g, const VertexSet& s) {
  return check_set(g, s, SetMode::Independent);
}

/// Graph from an explicit edge list; convenience for tests and generators.
Graph make_graph(int n, const std::vector<Edge>& edges);

}  // namespace a2i
