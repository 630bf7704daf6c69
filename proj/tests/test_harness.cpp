#include <gtest/gtest.h>

#include "support.hpp"
#include "treecount/error.hpp"
#include "treecount/harness.hpp"

using namespace treecount;
using namespace testing_support;

TEST(Rng, Reproducible) {
  Rng a(5);
  Rng b(5);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.uniform(0, 9), b.uniform(0, 9));
  EXPECT_NE(trial_seed(1, 0), trial_seed(1, 1));
  EXPECT_NE(trial_seed(1, 0), trial_seed(2, 0));
}

TEST(ConnectedMultigraph, Bounds) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    MultiGraph g = gen_connected_multigraph(seed, 6, 10, 2);
    EXPECT_TRUE(is_connected(g));
    EXPECT_LE(g.vertex_count(), 6u);
    EXPECT_LE(g.edge_count(), std::max<std::size_t>(10, g.vertex_count() - 1));
    for (const Edge& e : g.edges()) EXPECT_LE(g.multiplicity(e.a, e.b), 2u);

    MultiGraph simple = gen_connected_multigraph(seed, 6, 10, 1);
    for (const Edge& e : simple.edges()) EXPECT_EQ(simple.multiplicity(e.a, e.b), 1u);
  }
  MultiGraph k1 = gen_connected_multigraph(std::uint64_t{3}, 1, 5, 2);
  EXPECT_EQ(k1.vertex_count(), 1u);
  EXPECT_EQ(k1.edge_count(), 0u);
}

TEST(ConnectedMultigraph, Deterministic) {
  EXPECT_EQ(gen_connected_multigraph(std::uint64_t{1}, 7, 12, 2), gen_connected_multigraph(std::uint64_t{1}, 7, 12, 2));
  MultiGraph a = gen_connected_multigraph(std::uint64_t{1}, 7, 12, 2);
  MultiGraph b = gen_connected_multigraph(std::uint64_t{2}, 7, 12, 2);
  MultiGraph c = gen_connected_multigraph(std::uint64_t{3}, 7, 12, 2);
  EXPECT_FALSE(a == b && b == c);
}

TEST(RegularMultigraph, IsRegular) {
  Rng rng(8);
  for (auto [n, r] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {2, 3}, {4, 3}, {6, 2}, {5, 4}}) {
    MultiGraph g = gen_regular_multigraph(rng, n, r);
    EXPECT_TRUE(is_regular(g, r));
    EXPECT_TRUE(is_connected(g));
  }
  EXPECT_THROW(gen_regular_multigraph(rng, 3, 1), Error);
}

TEST(Campaign, UnknownId) {
  try {
    run_campaign("nope", {}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownFormula);
  }
}

TEST(Campaign, ZeroTrials) {
  VerificationReport r = run_campaign("moon", {}, 0);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.trials, 0u);
}

TEST(Campaign, ReproducibleReports) {
  InstanceSpec spec;
  spec.seed = 77;
  for (const char* id : {"thm53", "thm510", "lemma23"}) {
    EXPECT_EQ(run_campaign(id, spec, 25).to_json(false), run_campaign(id, spec, 25).to_json(false));
  }
}

TEST(Campaign, PrintedSubdivisionFormulaFailsOnTriangle) {
  InstanceSpec spec;
  spec.mode = LsubMode::printed;
  spec.graph = complete_graph(3);
  VerificationReport r = run_campaign("lsub", spec, 1);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_NE(r.failures[0].message.find("192"), std::string::npos);
  EXPECT_NE(r.failures[0].message.find("oracle 3"), std::string::npos);
  EXPECT_FALSE(r.pass());

  spec.mode = LsubMode::corrected;
  EXPECT_TRUE(run_campaign("lsub", spec, 1).pass());
}

class ExtraCampaigns : public ::testing::TestWithParam<std::string> {};

TEST_P(ExtraCampaigns, Pass) {
  InstanceSpec spec;
  spec.seed = 99;
  VerificationReport r = run_campaign(GetParam(), spec, 100);
  EXPECT_TRUE(r.pass()) << r.to_json(false).dump(2);
  EXPECT_EQ(r.skipped, 0u);
}

INSTANTIATE_TEST_SUITE_P(Ids, ExtraCampaigns, ::testing::Values("oracle", "lemma22", "lemma23", "lemma55", "circ"));

TEST(InputJson, RoundTripsThroughResolve) {
  Rng rng(12);
  PartitionInstance p = gen_clique_partition_instance(rng);
  FormulaInput in;
  in.graph = p.graph;
  in.partition = p.partition;
  in.n = p.n;
  in.r = p.r;
  nlohmann::json j = input_to_json(in);
  MultiGraph g = parse_graph_json(j["graph"]);
  FormulaInput back = resolve_input(g, parse_partition_json(j["partition"]));
  EXPECT_EQ(back.partition.v0, p.partition.v0);
  EXPECT_EQ(back.partition.cliques, p.partition.cliques);
  EXPECT_EQ(back.n, p.n);
  EXPECT_EQ(back.r, p.r);
}
