#include <gtest/gtest.h>

#include "a2i/immersion.hpp"
#include "brute.hpp"
#include "instances.hpp"

using namespace a2i;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::InternalAssertion;
}

TriColoring tri(int n, std::initializer_list<Vertex> a, std::initializer_list<Vertex> b,
                std::initializer_list<Vertex> c) {
  return TriColoring{{VertexSet(n, a), VertexSet(n, b), VertexSet(n, c)}};
}

// K8 minus the edge 3-6, with a valid strong, totally odd K3 certificate on {0,1,2}.
struct Fixture {
  Graph g = [] {
    Graph k = bf::complete(8);
    k.remove_edge(3, 6);
    return k;
  }();
  Immersion base = [] {
    Immersion im;
    im.n = 8;
    im.branch = {0, 1, 2};
    im.paths[{0, 1}] = {0, 1};
    im.paths[{0, 2}] = {0, 3, 4, 2};
    im.paths[{1, 2}] = {1, 5, 6, 2};
    return im;
  }();
};

void expect_only(const VerificationReport& r, ViolationKind kind) {
  EXPECT_FALSE(r.valid);
  ASSERT_FALSE(r.violations.empty());
  for (const Violation& v : r.violations) EXPECT_EQ(v.kind, kind) << r.to_text();
}

}  // namespace

TEST(HallMatching, Examples) {
  Graph c5 = bf::cycle(5);
  EXPECT_EQ(hall_matching(c5, VertexSet(5), VertexSet(5, {0, 1})).size(), 0);
  Matching m = hall_matching(c5, VertexSet(5, {2, 3}), VertexSet(5, {0, 1}));
  EXPECT_EQ(m.edges, (std::vector<Edge>{{2, 0}, {3, 1}}));
  try {
    hall_matching(bf::complete(4), VertexSet(4, {2}), VertexSet(4, {0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::HallViolation);
    EXPECT_EQ(e.witness(), std::vector<Vertex>{2});
  }
}

TEST(HallMatching, WitnessViolatesHallCondition) {
  // 4 and 5 both see only 0 in the complement.
  Graph g = bf::complete(6);
  g.remove_edge(4, 0);
  g.remove_edge(5, 0);
  try {
    hall_matching(g, VertexSet(6, {4, 5}), VertexSet(6, {0, 1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::HallViolation);
    VertexSet c(6, std::span<const Vertex>(e.witness()));
    VertexSet co(6);
    for (Vertex u : c) co |= co_neighbors(g, u, VertexSet(6, {0, 1, 2}));
    EXPECT_LT(co.size(), c.size());
  }
}

TEST(ConstructFromColoring, CycleFive) {
  Graph c5 = bf::cycle(5);
  Immersion im = construct_from_clique_coloring(c5, tri(5, {0, 1}, {2, 3}, {4}));
  EXPECT_EQ(im.branch, (std::vector<Vertex>{2, 3, 4}));
  EXPECT_EQ(im.paths.at({2, 4}), (Path{2, 1, 0, 4}));
  EXPECT_EQ(im.paths.at({2, 3}), (Path{2, 3}));
  EXPECT_EQ(im.paths.at({3, 4}), (Path{3, 4}));
  auto r = verify_immersion(c5, im, true, true);
  EXPECT_TRUE(r.valid && r.strong && r.totally_odd);
}

TEST(ConstructFromColoring, CompleteGraphShortCircuit) {
  Graph k5 = bf::complete(5);
  Immersion im = construct_from_clique_coloring(k5, tri(5, {0, 1}, {2, 3}, {4}));
  EXPECT_EQ(im.branch, (std::vector<Vertex>{2, 3, 4}));
  for (const auto& [pair, path] : im.paths) EXPECT_EQ(path.size(), 2u);
  Immersion k4 = construct_from_clique_coloring(bf::complete(4), tri(4, {0, 1}, {2}, {3}));
  EXPECT_EQ(k4.branch, (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(k4.paths.size(), 1u);
}

TEST(ConstructFromColoring, BalancedBlowupGivesK6) {
  std::vector<int> twos(5, 2);
  Blowup b = gamma_blowup(2, twos);
  Graph g = complement(b.graph);
  TriColoring c = blowup_coloring(b.graph, b.classes, max_clique(g));
  Immersion im = construct_from_clique_coloring(g, c);
  EXPECT_EQ(im.branch.size(), 6u);
  EXPECT_TRUE(verify_immersion(g, im, true, true).valid);
}

TEST(ConstructFromColoring, PreconditionErrors) {
  Graph c5 = bf::cycle(5);
  EXPECT_EQ(code_of([&] { construct_from_clique_coloring(c5, tri(5, {0, 2}, {1}, {3, 4})); }),
            Errc::NotCliquePartition);
  EXPECT_EQ(code_of([&] { construct_from_clique_coloring(c5, tri(5, {0, 1}, {2, 3}, {})); }),
            Errc::NotCliquePartition);
  EXPECT_EQ(code_of([&] { construct_from_clique_coloring(c5, tri(5, {0}, {1, 2}, {3, 4})); }),
            Errc::D1NotMaximum);
  EXPECT_EQ(code_of([&] { construct_from_clique_coloring(Graph(3), tri(3, {0}, {1}, {2})); }),
            Errc::AlphaMismatch);
  // D2 u D3 = {3,4,5,6} carries the induced 4-cycle 3-4-6-5.
  Graph g = make_graph(7, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {5, 6}, {4, 6}, {3, 5},
                           {0, 3}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {2, 6}});
  ASSERT_EQ(bf::alpha(g), 2);
  ASSERT_EQ(bf::omega(g), 3);
  try {
    construct_from_clique_coloring(g, tri(7, {0, 1, 2}, {3, 4}, {5, 6}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InducedC4Present);
    std::vector<Vertex> w = e.witness();
    std::sort(w.begin(), w.end());
    EXPECT_EQ(w, (std::vector<Vertex>{3, 4, 5, 6}));
  }
}

TEST(ConstructFromColoring, RandomBlowupsAreSound) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto bc = inst::random_blowup(seed + 11, 1, 5, 4);
    const Graph& g = bc.graph;
    TriColoring c = blowup_coloring(bc.blowup, bc.classes, max_clique(g));
    Immersion im = construct_from_clique_coloring(g, c);
    EXPECT_EQ(VertexSet(g.order(), std::span<const Vertex>(im.branch)), c[1] | c[2]);
    auto r = verify_immersion(g, im, true, true);
    EXPECT_TRUE(r.valid) << r.to_text();
    for (const auto& [pair, path] : im.paths) {
      EXPECT_TRUE(path.size() == 2 || path.size() == 4);
      if (path.size() == 4) {
        EXPECT_TRUE(c[0].test(path[1]) && c[0].test(path[2]));
        EXPECT_FALSE(g.adjacent(pair.first, pair.second));
      }
    }
  }
}

TEST(VerifyImmersion, CycleFiveCertificateAndCorruption) {
  Graph c5 = bf::cycle(5);
  Immersion im = construct_from_clique_coloring(c5, tri(5, {0, 1}, {2, 3}, {4}));
  auto ok = verify_immersion(c5, im, true, true);
  EXPECT_TRUE(ok.valid);
  EXPECT_TRUE(ok.strong);
  EXPECT_TRUE(ok.totally_odd);

  im.paths[{2, 4}] = {2, 3, 4};
  auto bad = verify_immersion(c5, im, true, false);
  EXPECT_FALSE(bad.valid);
  EXPECT_FALSE(bad.strong);
  bool named = false;
  for (const Violation& v : bad.violations)
    if (v.kind == ViolationKind::DuplicateEdge && v.edge == Edge{3, 4}) {
      named = true;
      EXPECT_TRUE((v.pair == VertexPair{2, 4} && v.other_pair == VertexPair{3, 4}) ||
                  (v.pair == VertexPair{3, 4} && v.other_pair == VertexPair{2, 4}));
    }
  EXPECT_TRUE(named) << bad.to_text();
  EXPECT_TRUE(bad.has(ViolationKind::BranchInternalVertex));
}

TEST(VerifyImmersion, TrivialBranchSets) {
  Immersion one;
  one.n = 3;
  one.branch = {1};
  EXPECT_TRUE(verify_immersion(bf::path(3), one, true, true).valid);
  Immersion none;
  none.n = 3;
  EXPECT_TRUE(verify_immersion(bf::path(3), none, true, true).valid);
}

TEST(VerifyImmersion, FixtureAccepted) {
  Fixture f;
  auto r = verify_immersion(f.g, f.base, true, true);
  EXPECT_TRUE(r.valid && r.strong && r.totally_odd) << r.to_text();
}

TEST(VerifyImmersion, MissingPair) {
  Fixture f;
  f.base.paths.erase({0, 1});
  expect_only(verify_immersion(f.g, f.base, true, true), ViolationKind::MissingPair);
}

TEST(VerifyImmersion, WrongEndpoint) {
  Fixture f;
  f.base.paths[{1, 2}] = {1, 5, 6, 4};
  expect_only(verify_immersion(f.g, f.base, true, true), ViolationKind::EndpointMismatch);
}

TEST(VerifyImmersion, NonEdgeStep) {
  Fixture f;
  f.base.paths[{1, 2}] = {1, 3, 6, 2};
  auto r = verify_immersion(f.g, f.base, true, true);
  expect_only(r, ViolationKind::NonEdgeStep);
  EXPECT_EQ(r.violations[0].edge, (Edge{3, 6}));
}

TEST(VerifyImmersion, DuplicatedEdge) {
  Fixture f;
  f.base.paths[{1, 2}] = {1, 5, 4, 2};
  auto r = verify_immersion(f.g, f.base, true, true);
  expect_only(r, ViolationKind::DuplicateEdge);
  EXPECT_EQ(r.violations[0].edge, (Edge{2, 4}));
  EXPECT_EQ(r.violations[0].pair, (VertexPair{1, 2}));
  EXPECT_EQ(r.violations[0].other_pair, (VertexPair{0, 2}));
}

TEST(VerifyImmersion, BranchInternalVertex) {
  Fixture f;
  f.base.paths[{1, 2}] = {1, 5, 0, 6, 7, 2};
  expect_only(verify_immersion(f.g, f.base, true, true), ViolationKind::BranchInternalVertex);
  auto relaxed = verify_immersion(f.g, f.base, false, true);
  EXPECT_TRUE(relaxed.valid);
  EXPECT_FALSE(relaxed.strong);
}

TEST(VerifyImmersion, EvenPath) {
  Fixture f;
  f.base.paths[{1, 2}] = {1, 5, 2};
  expect_only(verify_immersion(f.g, f.base, true, true), ViolationKind::EvenPath);
  auto relaxed = verify_immersion(f.g, f.base, true, false);
  EXPECT_TRUE(relaxed.valid);
  EXPECT_FALSE(relaxed.totally_odd);
}

TEST(VerifyImmersion, SchemaFindings) {
  Fixture f;
  f.base.paths[{1, 2}] = {1, 8, 2};
  expect_only(verify_immersion(f.g, f.base, false, false), ViolationKind::Schema);
  Fixture g;
  g.base.n = 9;
  EXPECT_TRUE(verify_immersion(g.g, g.base, true, true).has(ViolationKind::Schema));
  Fixture h;
  h.base.branch.push_back(8);
  EXPECT_TRUE(verify_immersion(h.g, h.base, true, true).has(ViolationKind::Schema));
  Fixture r;
  r.base.paths[{1, 2}] = {1, 5, 1, 2};
  EXPECT_TRUE(verify_immersion(r.g, r.base, false, false).has(ViolationKind::NotAPath));
}

TEST(JoinImmersions, Examples) {
  Graph k2 = bf::complete(2);
  Immersion a = clique_immersion(k2, VertexSet(2, {0}));
  Immersion b = clique_immersion(k2, VertexSet(2, {1}));
  Immersion j = join_immersions(k2, a, b);
  EXPECT_EQ(j.branch, (std::vector<Vertex>{0, 1}));
  EXPECT_TRUE(verify_immersion(k2, j, true, true).valid);

  // C5 on {0..4} joined with K2 on {5,6}.
  Graph g(7);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  g.add_edge(5, 6);
  for (int i = 0; i < 5; ++i)
    for (int k = 5; k < 7; ++k) g.add_edge(i, k);
  auto c5 = induced_subgraph(g, VertexSet(7, {0, 1, 2, 3, 4}));
  Immersion k3 = lift_immersion(construct_from_clique_coloring(c5.graph, tri(5, {0, 1}, {2, 3}, {4})),
                                c5.to_parent, 7);
  Immersion k2b = clique_immersion(g, VertexSet(7, {5, 6}));
  Immersion k5 = join_immersions(g, k3, k2b);
  EXPECT_EQ(k5.branch.size(), 5u);
  EXPECT_EQ(k5.paths.size(), 10u);
  EXPECT_TRUE(verify_immersion(g, k5, true, true).valid);

  Immersion empty;
  empty.n = 7;
  EXPECT_EQ(join_immersions(g, empty, k2b), k2b);
}

TEST(JoinImmersions, Errors) {
  Graph p3 = bf::path(3);
  Immersion a = clique_immersion(p3, VertexSet(3, {0}));
  Immersion c = clique_immersion(p3, VertexSet(3, {2}));
  EXPECT_EQ(code_of([&] { join_immersions(p3, a, c); }), Errc::MissingCrossEdge);
  EXPECT_EQ(code_of([&] { join_immersions(p3, a, a); }), Errc::InvalidArgument);

  Graph k4 = bf::complete(4);
  Immersion x;
  x.n = 4;
  x.branch = {0};
  Immersion y;
  y.n = 4;
  y.branch = {1, 2};
  y.paths[{1, 2}] = {1, 0, 3, 2};  // reuses the join edge 0-1
  EXPECT_EQ(code_of([&] { join_immersions(k4, x, y); }), Errc::EdgeCollision);
}

TEST(BranchRestrict, Examples) {
  Graph c5 = bf::cycle(5);
  Immersion im = construct_from_clique_coloring(c5, tri(5, {0, 1}, {2, 3}, {4}));
  Immersion two = branch_restrict(im, VertexSet(5, {2, 4}));
  EXPECT_EQ(two.paths.size(), 1u);
  EXPECT_TRUE(verify_immersion(c5, two, true, true).valid);
  EXPECT_EQ(branch_restrict(im, VertexSet(5, {2, 3, 4})), im);
  EXPECT_EQ(code_of([&] { branch_restrict(im, VertexSet(5, {0, 2})); }), Errc::NotSubset);
}

TEST(LiftImmersion, RelabelsAndReorients) {
  Immersion im;
  im.n = 3;
  im.branch = {0, 2};
  im.paths[{0, 2}] = {0, 1, 2};
  Immersion up = lift_immersion(im, {4, 1, 0}, 5);
  EXPECT_EQ(up.branch, (std::vector<Vertex>{0, 4}));
  EXPECT_EQ(up.paths.at({0, 4}), (Path{0, 1, 4}));
}
