#include <gtest/gtest.h>

#include <algorithm>
#include <deque>

#include "support.hpp"
#include "treecount/constructions.hpp"
#include "treecount/error.hpp"
#include "treecount/harness.hpp"

using namespace treecount;
using namespace testing_support;

namespace {

std::vector<std::size_t> degrees(const MultiGraph& g) {
  std::vector<std::size_t> out;
  for (const Vertex& v : g.vertices()) out.push_back(g.degree(v.id));
  std::sort(out.begin(), out.end());
  return out;
}

// Length of the shortest cycle, by BFS from every vertex (simple graphs).
std::size_t girth(const MultiGraph& g) {
  std::size_t best = SIZE_MAX;
  for (const Vertex& s : g.vertices()) {
    std::map<VertexId, std::size_t> dist;
    std::map<VertexId, EdgeId> via;
    std::deque<VertexId> queue{s.id};
    dist[s.id] = 0;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (EdgeId e : g.incident_edges(v)) {
        if (via.contains(v) && via[v] == e) continue;
        VertexId w = g.edge(e).other(v);
        if (!dist.contains(w)) {
          dist[w] = dist[v] + 1;
          via[w] = e;
          queue.push_back(w);
        } else {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(Star, Examples) {
  MultiGraph k2 = graph_of("e a b\n");
  StarResult one = star_graph(k2, k2.edge_set());
  EXPECT_EQ(one.graph.vertex_count(), 3u);
  EXPECT_EQ(one.new_edges.size(), 2u);
  EXPECT_EQ(one.centers.size(), 1u);

  MultiGraph path = graph_of("e a b\ne b c\n");
  StarResult p = star_graph(path, path.edge_set());
  EXPECT_EQ(p.centers.size(), 1u);
  EXPECT_EQ(p.graph.degree(p.centers[0]), 3u);

  MultiGraph k4 = graph_of(k4_text());
  StarResult m = star_graph(k4, labels(k4, {"ab", "cd"}));
  EXPECT_EQ(m.centers.size(), 2u);
  EXPECT_EQ(m.new_edges.size(), 4u);

  EXPECT_EQ(kind_of([&] { star_graph(k4, {}); }), ErrorKind::EmptyEdgeSet);
}

TEST(Bullet, Examples) {
  MultiGraph g = graph_of("e a b\ne b c\ne a c\ne a p\n");
  Contraction c = bullet_contract(g, names(g, {"a", "b", "c"}));
  EXPECT_EQ(c.graph.vertex_count(), 2u);
  EXPECT_EQ(c.graph.edge_count(), 1u);

  MultiGraph k4 = complete_graph(4);
  Contraction all = bullet_contract(k4, k4.vertex_set());
  EXPECT_EQ(all.graph.vertex_count(), 1u);
  EXPECT_EQ(all.graph.edge_count(), 0u);

  MultiGraph pair = graph_of("e x1 x2\ne y1 y2\ne x2 y1\n");
  Contraction two = bullet_contract_parts(pair, {names(pair, {"x1", "x2"}), names(pair, {"y1", "y2"})});
  EXPECT_EQ(two.graph.vertex_count(), 2u);
  EXPECT_EQ(two.graph.edge_count(), 1u);
  EXPECT_EQ(bullet_contract(pair, names(pair, {"x1", "x2", "y1", "y2"})).graph.vertex_count(), 1u);
}

TEST(Bullet, MultiplicityLaw) {
  for (int seed = 0; seed < 50; ++seed) {
    Rng rng(trial_seed(301, seed));
    PartitionInstance p = gen_clique_partition_instance(rng);
    VertexSet u = p.partition.clique_union();
    Contraction c = bullet_contract(p.graph, u);
    std::vector<VertexId> images = clique_images(c, p.partition);
    for (std::size_t i = 0; i < p.partition.cliques.size(); ++i) {
      for (VertexId v : p.partition.v0) {
        std::size_t expected = 0;
        for (VertexId x : p.partition.cliques[i]) expected += p.graph.multiplicity(v, x);
        EXPECT_EQ(c.graph.multiplicity(images[i], c.map(v)), expected);
      }
    }
  }
}

TEST(VertexSplit, Examples) {
  MultiGraph star = graph_of("e v a\ne v b\ne v c\n");
  SplitResult s = vertex_split(star, star.vertex_named("v"), {star.edges()[0].id});
  EXPECT_EQ(s.graph.vertex_count(), 5u);
  EXPECT_EQ(s.graph.edge_count(), 4u);
  EXPECT_EQ(s.graph.degree(s.new_vertex), 3u);
  EXPECT_EQ(s.graph.degree(star.vertex_named("v")), 2u);

  VertexId v = star.vertex_named("v");
  EdgeSet all(star.incident_edges(v).begin(), star.incident_edges(v).end());
  SplitResult pendant = vertex_split(star, v, all);
  EXPECT_EQ(pendant.graph.degree(pendant.new_vertex), 1u);
  EXPECT_EQ(delete_vertices(pendant.graph, {pendant.new_vertex}), star);
}

TEST(DiamondSubgraph, PetersenFromK5) {
  MultiGraph k5 = complete_graph(5);
  // the 5-cycle 1-2-3-4-5
  EdgeSet cycle;
  for (const Edge& e : k5.edges()) {
    std::size_t a = k5.index_of(e.a);
    std::size_t b = k5.index_of(e.b);
    if (b == a + 1 || (a == 0 && b == 4)) cycle.insert(e.id);
  }
  DiamondSubgraphResult d = diamond_subgraph(k5, k5.vertex_set(), cycle);
  EXPECT_EQ(d.graph.vertex_count(), 10u);
  EXPECT_EQ(d.graph.edge_count(), 15u);
  EXPECT_EQ(degrees(d.graph), std::vector<std::size_t>(10, 3));
  EXPECT_EQ(girth(d.graph), 5u);
  EXPECT_EQ(count_spanning_trees(d.graph), 2000);
}

TEST(DiamondSubgraph, WholeGraphIsUnchanged) {
  MultiGraph k4 = graph_of(k4_text());
  DiamondSubgraphResult d = diamond_subgraph(k4, k4.vertex_set(), k4.edge_set());
  EXPECT_EQ(d.graph, k4);
  EXPECT_TRUE(d.new_edges.empty());
  EXPECT_EQ(kind_of([&] { diamond_subgraph(k4, names(k4, {"a"}), labels(k4, {"cd"})); }), ErrorKind::NotASubgraph);
}

TEST(DiamondPartition, TriangleOfSingletons) {
  MultiGraph k3 = complete_graph(3);
  std::vector<EdgeSet> parts;
  for (const Edge& e : k3.edges()) parts.push_back({e.id});
  DiamondPartition d = diamond_partition(k3, parts);
  EXPECT_EQ(d.quotient.vertex_count(), 6u);
  EXPECT_EQ(d.quotient.edge_count(), 6u);
  EXPECT_EQ(degrees(d.quotient), std::vector<std::size_t>(6, 2));
  EXPECT_TRUE(is_connected(d.quotient));
  EXPECT_EQ(d.new_edges.size(), 6u);
}

TEST(DiamondPartition, SinglePart) {
  MultiGraph k4 = graph_of(k4_text());
  DiamondPartition d = diamond_partition(k4, {k4.edge_set()});
  EXPECT_EQ(d.graph, k4);
  EXPECT_EQ(d.quotient.vertex_count(), 1u);
  EXPECT_TRUE(d.new_edges.empty());
}

TEST(DiamondPartition, RejectsNonPartitions) {
  MultiGraph k4 = graph_of(k4_text());
  EXPECT_EQ(kind_of([&] { diamond_partition(k4, {labels(k4, {"ab"})}); }), ErrorKind::NotAPartition);
  EXPECT_EQ(kind_of([&] { diamond_partition(k4, {k4.edge_set(), labels(k4, {"ab"})}); }), ErrorKind::NotAPartition);
}

TEST(DiamondPartition, OrderIndependent) {
  for (int seed = 0; seed < 40; ++seed) {
    Rng rng(trial_seed(302, seed));
    MultiGraph g = gen_connected_multigraph(rng, 7, 12, 2);
    std::vector<EdgeSet> parts = random_edge_partition(rng, g, 4);
    std::vector<EdgeSet> shuffled = parts;
    rng.shuffle(shuffled);
    DiamondPartition a = diamond_partition(g, parts);
    DiamondPartition b = diamond_partition(g, shuffled);
    EXPECT_EQ(count_spanning_trees(a.graph), count_spanning_trees(b.graph));
    EXPECT_EQ(degrees(a.graph), degrees(b.graph));
    EXPECT_EQ(degrees(a.quotient), degrees(b.quotient));
  }
}

TEST(Omega, Weights) {
  MultiGraph k4 = graph_of(k4_text());
  CliquePartition p = make_partition(k4, {names(k4, {"a", "b", "c"})});
  EdgeSet m = p.m(k4);
  EdgeWeighting none = omega_weighting(k4, p, {});
  EdgeWeighting all = omega_weighting(k4, p, m);
  for (EdgeId e : m) {
    EXPECT_EQ(none(e), Rational(3, 4));
    EXPECT_EQ(all(e), 3);
  }
  EXPECT_EQ(none(k4.edge_labeled("ab")), 1);
}

TEST(CircReduce, NoParallelClasses) {
  MultiGraph g = graph_of("e x y\ne y z\ne x z\ne w x\ne v y\ne v w\n");
  CliquePartition p = make_partition(g, {names(g, {"x", "y", "z"})});
  CircReduced c = circ_reduce(g, p, {});
  EXPECT_EQ(c.graph, c.bullet.graph);
  for (const Edge& e : c.graph.edges()) EXPECT_EQ(c.weights(e.id), c.omega(e.id));
}

TEST(CircReduce, ParallelClassAbsorbsMultiplicity) {
  MultiGraph g = graph_of("e x y\ne y z\ne x z\ne w x m1\ne w y m2\n");
  CliquePartition p = make_partition(g, {names(g, {"x", "y", "z"})});
  CircReduced c = circ_reduce(g, p, {});
  EXPECT_EQ(c.bullet.graph.edge_count(), 2u);
  ASSERT_EQ(c.graph.edge_count(), 1u);
  EXPECT_EQ(c.weights(c.graph.edges()[0].id), Rational(2) * Rational(3, 4));

  CircReduced mixed = circ_reduce(g, p, labels(g, {"m1"}));
  EXPECT_EQ(mixed.graph.edge_count(), 2u);
  EXPECT_THROW(circ_reduce(g, p, labels(g, {"e1"})), HypothesisViolated);
}

TEST(LineGraph, Examples) {
  for (std::size_t n = 3; n <= 7; ++n) {
    LineGraph l = line_graph(cycle_graph(n));
    EXPECT_EQ(l.graph.vertex_count(), n);
    EXPECT_EQ(l.graph.edge_count(), n);
    EXPECT_EQ(count_spanning_trees(l.graph), n);
  }
  LineGraph lk4 = line_graph(complete_graph(4));
  EXPECT_EQ(lk4.graph.vertex_count(), 6u);
  EXPECT_EQ(lk4.graph.edge_count(), 12u);
  EXPECT_EQ(count_spanning_trees(lk4.graph), 384);

  MultiGraph doubled = graph_of("e a b p\ne a b q\n");
  LineGraph ld = line_graph(doubled);
  EXPECT_EQ(ld.graph.edge_count(), 2u);
}

TEST(Subdivision, Examples) {
  Subdivision s = subdivision(complete_graph(3));
  EXPECT_EQ(s.graph.vertex_count(), 6u);
  EXPECT_EQ(degrees(s.graph), std::vector<std::size_t>(6, 2));
  EXPECT_EQ(count_spanning_trees(s.graph), 6);
  Subdivision c8 = subdivision(cycle_graph(4));
  EXPECT_EQ(c8.graph.vertex_count(), 8u);
  EXPECT_EQ(count_spanning_trees(c8.graph), 8);
}

TEST(MiddleGraph, Examples) {
  MiddleGraph m = middle_graph(complete_graph(3));
  EXPECT_EQ(m.graph.vertex_count(), 6u);
  EXPECT_EQ(m.graph.edge_count(), 9u);
  EXPECT_EQ(count_spanning_trees(m.graph), 54);
  MiddleGraph k2 = middle_graph(complete_graph(2));
  EXPECT_EQ(count_spanning_trees(k2.graph), 1);
}

TEST(Reduction, FigureStyleThreeComponents) {
  MultiGraph g = graph_of(
      "e x1 x2\ne y1 y2\n"
      "e x1 p m1\ne p y1 m2\ne x2 q m3\ne y2 z m4\n"
      "e p q\n");
  std::vector<VertexSet> cliques = {names(g, {"x1", "x2"}), names(g, {"y1", "y2"}), names(g, {"z"})};
  EdgeSet w = labels(g, {"m1", "m2", "m3", "m4"});
  Reduction r = reduce_to_special_case(g, cliques, w);
  EXPECT_TRUE(r.certificate.ok());
  EXPECT_EQ(r.graph.vertex_count(), g.vertex_count() + 3);
  EXPECT_EQ(r.partition.v0.size(), 2u + 3u);
  EXPECT_EQ(count_constrained(r.graph, r.w_prime), count_constrained(g, w));
  EXPECT_EQ(r.w_prime, set_union(r.m_prime, r.n_prime));
}

TEST(Reduction, Rejections) {
  MultiGraph g = graph_of("e x1 x2\ne x1 p m1\ne x2 p m2\ne p q\n");
  std::vector<VertexSet> cliques = {names(g, {"x1", "x2"})};
  EXPECT_EQ(kind_of([&] { reduce_to_special_case(g, cliques, labels(g, {"m1"})); }), ErrorKind::MNotContained);
  EXPECT_EQ(kind_of([&] { reduce_to_special_case(g, cliques, labels(g, {"m1", "m2", "e1"})); }),
            ErrorKind::NotAForest);
}

TEST(Reduction, RandomInstancesPreserveCount) {
  for (int seed = 0; seed < 100; ++seed) {
    Rng rng(trial_seed(303, seed));
    ReductionInstance inst = gen_reduction_instance(rng);
    Reduction r = reduce_to_special_case(inst.graph, inst.cliques, inst.w);
    ASSERT_TRUE(r.certificate.ok()) << "seed " << seed;
    EXPECT_EQ(count_constrained(r.graph, r.w_prime), count_constrained(inst.graph, inst.w));
  }
}

TEST(Lemma, StarPreservesConstrainedCount) {
  for (int seed = 0; seed < 100; ++seed) {
    Rng rng(trial_seed(304, seed));
    MultiGraph g = gen_connected_multigraph(rng, 7, 12, 2);
    if (g.edge_count() == 0) continue;
    EdgeSet w = random_forest(rng, g, g.edge_set(), 1, 2);
    if (w.empty()) w.insert(g.edges()[0].id);
    EdgeSet w0;
    for (EdgeId e : w) {
      if (rng.chance(1, 2)) w0.insert(e);
    }
    StarResult s = star_graph(g, w);
    Count lhs = brute_force_count(g, w);
    EXPECT_EQ(count_constrained(s.graph, s.new_edges), lhs);
    EXPECT_EQ(count_constrained(delete_edges(s.graph, w0), s.new_edges), lhs);
  }
}

TEST(Lemma, DiamondPreservesConstrainedCount) {
  for (int seed = 0; seed < 100; ++seed) {
    Rng rng(trial_seed(305, seed));
    MultiGraph g = gen_connected_multigraph(rng, 7, 12, 2);
    std::vector<EdgeSet> parts = random_edge_partition(rng, g, 4);
    EdgeSet n = random_forest(rng, g, g.edge_set(), 1, 3);
    DiamondPartition d = diamond_partition(g, parts);
    EXPECT_EQ(count_constrained(d.graph, set_union(d.new_edges, n)), count_constrained(g, n));

    // same statement for a single subgraph
    EdgeSet es = parts.front();
    DiamondSubgraphResult ds = diamond_subgraph(g, endpoints(g, es), es);
    EXPECT_EQ(count_constrained(ds.graph, set_union(ds.new_edges, n)), count_constrained(g, n));
  }
}

TEST(PartitionChecks, ReportsNamedConditions) {
  MultiGraph k4 = graph_of(k4_text());
  CliquePartition good = make_partition(k4, {names(k4, {"a", "b"})});
  // a and b both see c and d, so M is not a union of stars centred in V0
  EXPECT_FALSE(good.check(k4).ok());
  CliquePartition ok = make_partition(k4, {names(k4, {"a", "b", "c"})});
  EXPECT_TRUE(ok.check(k4).ok());

  MultiGraph path = graph_of("e a b\ne b c\n");
  CliquePartition notclique = make_partition(path, {names(path, {"a", "c"})});
  auto failed = notclique.check(path).failed();
  EXPECT_NE(std::find(failed.begin(), failed.end(), "cliques"), failed.end());
}

TEST(CutChecks, ReportsNamedConditions) {
  MultiGraph g = graph_of("e u1 u2\ne u2 u3\ne u1 u3\ne a u1\ne a u2\ne b u3\n");
  CliqueCut cut{names(g, {"u1", "u2", "u3"}), names(g, {"a"}), names(g, {"b"}), {}};
  EXPECT_TRUE(cut.check(g).ok());
  MultiGraph linked = graph_of("e u1 u2\ne u2 u3\ne u1 u3\ne a u1\ne a u2\ne b u2\n");
  CliqueCut overlapping{names(linked, {"u1", "u2", "u3"}), names(linked, {"a"}), names(linked, {"b"}), {}};
  auto failed = overlapping.check(linked).failed();
  EXPECT_NE(std::find(failed.begin(), failed.end(), "N[S1] and N[S2] disjoint"), failed.end());
}

TEST(Generators, HypothesesHoldByConstruction) {
  for (int seed = 0; seed < 200; ++seed) {
    Rng rng(trial_seed(306, seed));
    PartitionInstance p = gen_clique_partition_instance(rng);
    EXPECT_TRUE(p.partition.check(p.graph).ok()) << seed;
    EXPECT_TRUE(is_forest(p.graph, p.n));

    CutInstance c = gen_clique_cut_instance(rng);
    EXPECT_TRUE(c.cut.check(c.graph).ok()) << seed;
    EXPECT_LE(c.graph.edge_count(), 14u);

    CutBounds pendant;
    pendant.pendant = true;
    CutInstance w = gen_clique_cut_instance(rng, pendant);
    ASSERT_TRUE(w.w.has_value());
    EXPECT_EQ(w.cut.s1, VertexSet{*w.w});
    EXPECT_TRUE(w.cut.check(w.graph).ok());

    MatchingInstance m = gen_matching_instance(rng);
    CliquePartition mp = make_partition(m.graph, m.cliques);
    EXPECT_TRUE(mp.v0.empty());
    EXPECT_TRUE(is_connected(m.graph));

    PartitionBounds parallel;
    parallel.parallel_classes = true;
    PartitionInstance q = gen_clique_partition_instance(rng, parallel);
    EXPECT_TRUE(q.partition.check(q.graph).ok());
    CircReduced cr = circ_reduce(q.graph, q.partition, {});
    EXPECT_LT(cr.graph.edge_count(), cr.bullet.graph.edge_count());
  }
}
