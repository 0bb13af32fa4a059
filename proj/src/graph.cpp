#include "a2i/graph.hpp"

#include <charconv>
#include <optional>
#include <set>
#include <sstream>

namespace a2i {

Graph::Graph(int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "negative vertex count");
  adj_.assign(n, VertexSet(n));
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= order() || v >= order())
    throw Error(Errc::InvalidArgument, "edge endpoint out of range", {u, v});
  if (u == v) throw Error(Errc::InvalidArgument, "self-loop", {u});
  if (adj_[u].test(v)) return;
  adj_[u].insert(v);
  adj_[v].insert(u);
  ++edges_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (!adjacent(u, v)) return;
  adj_[u].erase(v);
  adj_[v].erase(u);
  --edges_;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& row : adj_) best = std::max(best, row.size());
  return best;
}

int Graph::min_degree() const {
  if (adj_.empty()) return 0;
  int best = order();
  for (const auto& row : adj_) best = std::min(best, row.size());
  return best;
}

bool Graph::is_complete() const {
  return 2 * static_cast<long long>(edges_) == static_cast<long long>(order()) * (order() - 1);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v = adj_[u].next(u); v != -1; v = adj_[u].next(v)) out.emplace_back(u, v);
  return out;
}

namespace {

std::optional<std::pair<long long, long long>> two_ints(std::string_view line) {
  long long vals[2];
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
  };
  for (auto& val : vals) {
    skip_ws();
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), val);
    if (ec != std::errc{}) return std::nullopt;
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  skip_ws();
  if (pos != line.size()) return std::nullopt;
  return std::pair{vals[0], vals[1]};
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<Graph> g;
  long long expected = 0;
  long long seen = 0;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;

    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;

    auto vals = two_ints(line);
    if (!vals) throw ParseError(ParseErrc::Malformed, lineno, "expected two integers");
    auto [a, b] = *vals;
    if (!g) {
      if (a < 0 || b < 0 || a > (1 << 24))
        throw ParseError(ParseErrc::Malformed, lineno, "invalid header");
      g.emplace(static_cast<int>(a));
      expected = b;
      continue;
    }
    if (seen == expected) throw ParseError(ParseErrc::Malformed, lineno, "more edges than declared");
    if (a < 0 || b < 0 || a >= g->order() || b >= g->order())
      throw ParseError(ParseErrc::OutOfRange, lineno, "vertex out of range");
    if (a == b) throw ParseError(ParseErrc::SelfLoop, lineno, "self-loop");
    auto u = static_cast<Vertex>(a);
    auto v = static_cast<Vertex>(b);
    if (g->adjacent(u, v)) throw ParseError(ParseErrc::DuplicateEdge, lineno, "duplicate edge");
    g->add_edge(u, v);
    ++seen;
  }
  if (!g) throw ParseError(ParseErrc::Malformed, lineno, "missing header");
  if (seen != expected) throw ParseError(ParseErrc::Malformed, lineno, "fewer edges than declared");
  return std::move(*g);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count();
  for (auto [u, v] : g.edges()) out << '\n' << u << ' ' << v;
  return out.str();
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    VertexSet co = g.neighbors(u).complement();
    for (Vertex v = co.next(u); v != -1; v = co.next(v)) h.add_edge(u, v);
  }
  return h;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (v >= g.order()) throw Error(Errc::InvalidArgument, "induced set member out of range", {v});
  InducedSubgraph out;
  out.to_parent = s.to_vector();
  const int k = static_cast<int>(out.to_parent.size());
  out.graph = Graph(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(out.to_parent[i], out.to_parent[j])) out.graph.add_edge(i, j);
  return out;
}

VertexSet co_neighbors(const Graph& g, Vertex u, const VertexSet& x) {
  VertexSet out = x - g.neighbors(u);
  if (out.test(u)) out.erase(u);
  return out;
}

bool check_set(const Graph& g, const VertexSet& s, SetMode mode) {
  for (Vertex u : s) {
    int inside = s.intersection_size(g.neighbors(u));
    int others = s.size() - 1;
    if (mode == SetMode::Clique ? inside != others : inside != 0) return false;
  }
  return true;
}

Graph make_graph(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::AlphaTooLarge: return "AlphaTooLarge";
    case Errc::AlphaMismatch: return "AlphaMismatch";
    case Errc::NotCliquePartition: return "NotCliquePartition";
    case Errc::D1NotMaximum: return "D1NotMaximum";
    case Errc::InducedC4Present: return "InducedC4Present";
    case Errc::HallViolation: return "HallViolation";
    case Errc::TriangleInSource: return "TriangleInSource";
    case Errc::GammaTargetNotFound: return "GammaTargetNotFound";
    case Errc::NotWindow: return "NotWindow";
    case Errc::WitnessInconsistency: return "WitnessInconsistency";
    case Errc::NotMinimal: return "NotMinimal";
    case Errc::Complete: return "Complete";
    case Errc::Claim1Violation: return "Claim1Violation";
    case Errc::SelectionInfeasible: return "SelectionInfeasible";
    case Errc::MissingCrossEdge: return "MissingCrossEdge";
    case Errc::EdgeCollision: return "EdgeCollision";
    case Errc::NotSubset: return "NotSubset";
    case Errc::InternalAssertion: return "InternalAssertion";
  }
  return "Unknown";
}

}  // namespace a2i
