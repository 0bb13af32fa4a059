#include <gtest/gtest.h>

#include "a2i/certificate.hpp"
#include "a2i/generators.hpp"
#include "a2i/vergara.hpp"
#include "brute.hpp"
#include "instances.hpp"

using namespace a2i;

namespace {

Graph join(const Graph& a, const Graph& b) {
  const int na = a.order();
  Graph g(na + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < b.order(); ++v) g.add_edge(u, na + v);
  return g;
}

void expect_sound(const Graph& g, const ChiImmersion& r) {
  auto rep = verify_immersion(g, r.immersion, true, true);
  EXPECT_TRUE(rep.valid) << rep.to_text();
  EXPECT_EQ(static_cast<int>(r.immersion.branch.size()), chromatic_number_alpha2(g));
  EXPECT_EQ(r.chromatic_number, chromatic_number_alpha2(g));
}

}  // namespace

TEST(CriticalReduction, Examples) {
  auto c4 = critical_reduction(bf::cycle(4));
  EXPECT_EQ(c4.reduced.graph, bf::complete(2));
  EXPECT_EQ(c4.removed.to_vector(), (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(c4.reduced.to_parent, (std::vector<Vertex>{2, 3}));
  auto k5 = critical_reduction(bf::complete(5));
  EXPECT_EQ(k5.reduced.graph, bf::complete(5));
  EXPECT_TRUE(k5.removed.empty());
  auto c5 = critical_reduction(bf::cycle(5));
  EXPECT_EQ(c5.reduced.graph, bf::cycle(5));
}

TEST(CriticalReduction, ResultIsVertexCritical) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = inst::random_alpha2(seed + 77, 3, 14);
    auto cr = critical_reduction(g);
    const Graph& r = cr.reduced.graph;
    const int k = bf::chromatic(g);
    EXPECT_EQ(bf::chromatic(r), k);
    EXPECT_EQ(r.order() + cr.removed.size(), g.order());
    for (Vertex v = 0; v < r.order(); ++v) {
      VertexSet rest = r.vertices();
      rest.erase(v);
      EXPECT_LT(bf::chromatic(induced_subgraph(r, rest).graph), k);
    }
  }
}

TEST(JoinDecomposition, Examples) {
  auto k4 = join_decomposition(bf::complete(4));
  ASSERT_EQ(k4.size(), 4u);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(k4[i].to_vector(), std::vector<Vertex>{i});
  EXPECT_EQ(join_decomposition(bf::cycle(5)).size(), 1u);
  auto jc = join_decomposition(join(bf::complete(3), bf::cycle(5)));
  ASSERT_EQ(jc.size(), 4u);
  EXPECT_EQ(jc[3].to_vector(), (std::vector<Vertex>{3, 4, 5, 6, 7}));
  EXPECT_TRUE(join_decomposition(Graph(0)).empty());
}

TEST(ChiImmersion, CycleFive) {
  Graph c5 = bf::cycle(5);
  ChiImmersion r = construct_chi_immersion(c5);
  expect_sound(c5, r);
  EXPECT_EQ(r.immersion.branch, (std::vector<Vertex>{2, 3, 4}));
  EXPECT_EQ(r.immersion.paths.at({2, 4}), (Path{2, 1, 0, 4}));
  const auto& steps = r.trace.steps;
  ASSERT_EQ(steps.size(), 5u);
  EXPECT_EQ(steps[0]["removed"].size(), 0u);
  EXPECT_EQ(steps[1]["parts"].size(), 1u);
  EXPECT_EQ(steps[2]["d"], 2);
  EXPECT_EQ(steps[3]["i1"].size(), 2u);
  EXPECT_EQ(steps[3]["shortcut"], false);
  EXPECT_EQ(steps[4]["branch"], nlohmann::json({2, 3, 4}));
}

TEST(ChiImmersion, CompleteGraphJoinsSingletons) {
  Graph k7 = bf::complete(7);
  ChiImmersion r = construct_chi_immersion(k7);
  expect_sound(k7, r);
  EXPECT_EQ(r.trace.steps[1]["parts"].size(), 7u);
}

TEST(ChiImmersion, SixteenVertexBlowup) {
  std::vector<int> twos(8, 2);
  Graph g = gen_blowup_complement(3, twos, 0);
  EXPECT_EQ(max_matching(complement(g)).size(), 8);
  ChiImmersion r = construct_chi_immersion(g);
  expect_sound(g, r);
  EXPECT_EQ(r.immersion.branch.size(), 8u);

  VertexSet five(16);
  for (int i = 0; i < 5; ++i) five.insert(r.immersion.branch[i]);
  Immersion k5 = branch_restrict(r.immersion, five);
  EXPECT_EQ(k5.branch.size(), 5u);
  EXPECT_EQ(k5.paths.size(), 10u);
  EXPECT_TRUE(verify_immersion(g, k5, true, true).valid);
}

TEST(ChiImmersion, JoinOfTriangleAndPentagon) {
  Graph g = join(bf::complete(3), bf::cycle(5));
  ChiImmersion r = construct_chi_immersion(g);
  expect_sound(g, r);
  EXPECT_EQ(r.immersion.branch.size(), 6u);
}

TEST(ChiImmersion, Errors) {
  try {
    construct_chi_immersion(Graph(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::AlphaTooLarge);
  }
  try {
    construct_chi_immersion(bf::cycle(5), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::GammaTargetNotFound);
  }
  EXPECT_THROW(construct_chi_immersion(bf::cycle(5), 0), Error);
}

TEST(ChiImmersion, TinyGraphs) {
  for (int n = 0; n <= 2; ++n) {
    Graph g = bf::complete(n);
    expect_sound(g, construct_chi_immersion(g));
  }
  Graph two(2);
  ChiImmersion r = construct_chi_immersion(two);
  expect_sound(two, r);
  EXPECT_EQ(r.immersion.branch.size(), 1u);
}

TEST(ChiImmersion, GatedInstancesAreSound) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Graph g = inst::gated_instance(seed, 11, 30);
    ChiImmersion r = construct_chi_immersion(g);
    expect_sound(g, r);
  }
}

TEST(ChiImmersion, BlowupComplementsAreSound) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = inst::random_blowup(seed + 900, 1, 4, 3).graph;
    expect_sound(g, construct_chi_immersion(g));
  }
}

TEST(ChiImmersion, DeterministicAndReplayable) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = inst::gated_instance(seed + 50, 11, 25);
    ChiImmersion a = construct_chi_immersion(g);
    ChiImmersion b = construct_chi_immersion(g);
    EXPECT_EQ(a.immersion, b.immersion);
    EXPECT_EQ(a.trace.steps.dump(), b.trace.steps.dump());
    Immersion replayed = replay_chi_immersion(g, a.trace);
    EXPECT_EQ(serialize_certificate({replayed, "vergara", {}}),
              serialize_certificate({a.immersion, "vergara", {}}));
  }
}

TEST(ChiImmersion, ReplayRejectsTamperedTraces) {
  Graph c5 = bf::cycle(5);
  ChiImmersion r = construct_chi_immersion(c5);

  PipelineTrace wrong_map = r.trace;
  wrong_map.steps[2]["map"][0] = wrong_map.steps[2]["map"][1];
  EXPECT_THROW(replay_chi_immersion(c5, wrong_map), Error);

  PipelineTrace wrong_removal = r.trace;
  wrong_removal.steps[0]["removed"] = {0};
  EXPECT_THROW(replay_chi_immersion(c5, wrong_removal), Error);

  PipelineTrace short_trace = r.trace;
  short_trace.steps.erase(short_trace.steps.size() - 1);
  EXPECT_THROW(replay_chi_immersion(c5, short_trace), Error);

  PipelineTrace bad_shape;
  bad_shape.steps = nlohmann::json::array({{{"step", "critical_reduction"}, {"part", "x"}}});
  EXPECT_THROW(replay_chi_immersion(c5, bad_shape), Error);
}
