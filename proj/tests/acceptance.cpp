// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "treecount/constructions.hpp"
#include "treecount/enumerator.hpp"
#include "treecount/error.hpp"
#include "treecount/formulas.hpp"
#include "treecount/harness.hpp"
#include "treecount/kirchhoff.hpp"
#include "treecount/tutte.hpp"

using namespace treecount;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { notes.push_back("     " + what); }
};

std::string str(const Rational& v) { return to_string(v); }

std::string campaign_line(const VerificationReport& r) {
  std::ostringstream out;
  out << r.id << ": " << r.trials << " trials, " << r.failures.size() << " failures, " << r.skipped << " skipped, "
      << static_cast<long>(r.elapsed_ms) << " ms";
  if (!r.failures.empty()) out << "; first: " << r.failures.front().message;
  return out.str();
}

void campaign(Verdict& v, std::string_view id, std::size_t trials, std::uint64_t seed, double limit_ms = 0) {
  InstanceSpec spec;
  spec.seed = seed;
  VerificationReport r = run_campaign(id, spec, trials);
  bool ok = r.pass() && r.skipped == 0 && r.trials == trials;
  if (limit_ms > 0) ok = ok && r.elapsed_ms < limit_ms;
  v.check(ok, campaign_line(r));
}

// Bit-mask spanning trees of K_n by walking every (n-1)-subset of its edges.
std::vector<std::uint32_t> brute_trees_of_complete(std::size_t n, const std::vector<std::pair<int, int>>& ends) {
  std::vector<std::uint32_t> trees;
  const std::size_t m = ends.size();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != n - 1) continue;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool acyclic = true;
    for (std::size_t i = 0; i < m && acyclic; ++i) {
      if (!(mask >> i & 1)) continue;
      int a = find(ends[i].first);
      int b = find(ends[i].second);
      if (a == b) acyclic = false;
      parent[a] = b;
    }
    if (acyclic) trees.push_back(mask);
  }
  return trees;
}

bool mask_is_forest(std::uint32_t mask, std::size_t n, const std::vector<std::pair<int, int>>& ends) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < ends.size(); ++i) {
    if (!(mask >> i & 1)) continue;
    int a = find(ends[i].first);
    int b = find(ends[i].second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

Verdict cayley() {
  Verdict v;
  for (std::size_t n = 2; n <= 9; ++n) {
    Count got = count_spanning_trees(complete_graph(n));
    Count want = power(Count(static_cast<unsigned long>(n)), n - 2);
    v.check(got == want, "K" + std::to_string(n) + ": " + to_string(got) + " vs n^(n-2) = " + to_string(want));
  }
  return v;
}

Verdict moon_exhaustive() {
  Verdict v;
  for (std::size_t n = 4; n <= 6; ++n) {
    MultiGraph kn = complete_graph(n);
    std::vector<std::pair<int, int>> ends;
    std::vector<EdgeId> ids;
    for (const Edge& e : kn.edges()) {
      ends.emplace_back(static_cast<int>(kn.index_of(e.a)), static_cast<int>(kn.index_of(e.b)));
      ids.push_back(e.id);
    }
    std::vector<std::uint32_t> trees = brute_trees_of_complete(n, ends);
    std::size_t forests = 0;
    std::size_t failures = 0;
    std::string first;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << ends.size()); ++mask) {
      if (!mask_is_forest(mask, n, ends)) continue;
      ++forests;
      EdgeSet m;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (mask >> i & 1) m.insert(ids[i]);
      }
      Count brute = 0;
      for (std::uint32_t t : trees) {
        if ((t & mask) == mask) ++brute;
      }
      Rational moon = moon_count(n, m).value;
      Count constrained = count_constrained(kn, m);
      if (moon != Rational(brute) || constrained != brute) {
        if (failures++ == 0) {
          first = "mask " + std::to_string(mask) + ": moon " + str(moon) + ", constrained " + to_string(constrained) +
                  ", brute " + to_string(brute);
        }
      }
    }
    std::string line = "K" + std::to_string(n) + ": " + std::to_string(forests) + " forests, " +
                       std::to_string(failures) + " failures";
    if (failures) line += "; first " + first;
    v.check(failures == 0, line);
  }
  return v;
}

Verdict oracle_consistency() {
  Verdict v;
  std::size_t enum_fail = 0;
  std::size_t dc_fail = 0;
  std::size_t multi = 0;
  for (std::uint64_t t = 0; t < 300; ++t) {
    MultiGraph g = gen_connected_multigraph(trial_seed(3003, t), 8, 14, 3);
    Count tau = count_spanning_trees(g);
    Count listed = 0;
    for_each_spanning_tree(g, {}, [&](const EdgeSet&) { ++listed; });
    if (listed != tau) ++enum_fail;
    bool parallel = false;
    for (const Edge& e : g.edges()) {
      if (g.multiplicity(e.a, e.b) > 1) parallel = true;
      Count split = count_spanning_trees(delete_edges(g, {e.id})) + count_spanning_trees(contract_edges(g, {e.id}).graph);
      if (split != tau) ++dc_fail;
    }
    if (parallel) ++multi;
  }
  v.check(enum_fail == 0, "enumeration == Matrix-Tree on 300 graphs: " + std::to_string(enum_fail) + " failures");
  v.check(dc_fail == 0, "deletion-contraction at every edge: " + std::to_string(dc_fail) + " failures");
  v.note(std::to_string(multi) + " of 300 graphs carry parallel edges");
  return v;
}

Verdict line_graphs() {
  Verdict v;
  campaign(v, "cor11", 200, 4001);
  campaign(v, "eq14", 200, 4002);
  MultiGraph k4 = complete_graph(4);
  Count oracle = count_spanning_trees(line_graph(k4).graph);
  Rational general = line_graph_formula(k4).value;
  Rational regular = regular_line_graph(k4).value;
  Rational closed = Rational(power(Count(2), 3) * 3 * 16);
  v.check(oracle == 384 && general == 384 && regular == 384 && closed == 384,
          "L(K4): oracle " + to_string(oracle) + ", general " + str(general) + ", regular " + str(regular) +
              ", 2^3*3*16 = " + str(closed));
  return v;
}

Verdict partition_theorems() {
  Verdict v;
  for (const char* id : {"thm31", "thm42", "thm53", "cor531"}) campaign(v, id, 200, 5005, 120'000);
  return v;
}

Verdict circ_machinery() {
  Verdict v;
  std::size_t failures = 0;
  std::size_t collapsed = 0;
  std::string first;
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng(trial_seed(6006, t));
    PartitionBounds b;
    b.parallel_classes = true;
    PartitionInstance p = gen_clique_partition_instance(rng, b);
    CircReduced c = circ_reduce(p.graph, p.partition, p.r);
    if (c.graph.edge_count() < c.bullet.graph.edge_count()) ++collapsed;
    // Unreduced: omega over trees of G.U through N. Reduced: the absorbed
    // weights over the collapsed graph. Prefactors coincide.
    EdgeSet n_bullet = set_difference(p.n, c.bullet.map.dropped);
    EdgeSet n_reduced;
    for (EdgeId e : n_bullet) {
      if (c.graph.has_edge(e)) n_reduced.insert(e);
    }
    bool n_kept = n_reduced.size() == n_bullet.size();
    Rational unreduced = weighted_tree_sum_constrained(c.bullet.graph, c.omega, n_bullet);
    Rational reduced = weighted_tree_sum_constrained(c.graph, c.weights, n_reduced);
    Rational via_formula = thm53_reduced(p.graph, p.partition, p.r, p.n).value;
    Count oracle = count_constrained(p.graph, set_union(p.r, p.n));
    bool ok = n_kept && unreduced == reduced && via_formula == Rational(oracle) &&
              thm53_count(p.graph, p.partition, p.r, p.n).value == via_formula;
    if (!ok && failures++ == 0) {
      first = "trial " + std::to_string(t) + ": unreduced " + str(unreduced) + ", reduced " + str(reduced) +
              ", formula " + str(via_formula) + ", oracle " + to_string(oracle);
    }
  }
  v.check(failures == 0, "100 instances, " + std::to_string(failures) + " failures" + (failures ? "; " + first : ""));
  v.check(collapsed == 100, std::to_string(collapsed) + " of 100 instances had a parallel M-class collapsed");
  return v;
}

Verdict theorem54_family() {
  Verdict v;
  campaign(v, "thm54", 100, 7007);
  MultiGraph k3 = complete_graph(3);
  Rational mid = middle_graph_count(k3).value;
  Count mid_oracle = count_spanning_trees(middle_graph(k3).graph);
  v.check(mid == 54 && mid_oracle == 54, "M(K3): formula " + str(mid) + ", oracle " + to_string(mid_oracle));
  campaign(v, "mid", 100, 7008);
  campaign(v, "lsub", 100, 7009);
  Rational corrected = line_graph_via_subdivision(k3).value;
  Count l_oracle = count_spanning_trees(line_graph(k3).graph);
  v.check(corrected == Rational(l_oracle), "lsub corrected on K3: " + str(corrected) + " vs oracle " + to_string(l_oracle));

  // The uniform-exponent form as printed is known to be wrong on K3.
  EvalOptions printed;
  printed.mode = LsubMode::printed;
  Rational wrong = line_graph_via_subdivision(k3, printed).value;
  if (wrong != Rational(l_oracle)) {
    v.note("XFAIL lsub printed on K3: " + str(wrong) + " vs oracle " + to_string(l_oracle) + " (expected to fail)");
    v.check(wrong == 192 && l_oracle == 3, "printed form disagrees with the documented values 192 vs 3");
  } else {
    v.check(false, "XPASS lsub printed on K3 unexpectedly matched the oracle");
  }
  return v;
}

Verdict cut_factorization() {
  Verdict v;
  campaign(v, "thm510", 100, 8008);
  campaign(v, "cor51", 100, 8009);

  GraphBuilder b;
  VertexId u1 = b.add_vertex("u1");
  VertexId u2 = b.add_vertex("u2");
  VertexId u3 = b.add_vertex("u3");
  VertexId a = b.add_vertex("a");
  VertexId bb = b.add_vertex("b");
  b.add_edge(u1, u2);
  b.add_edge(u2, u3);
  b.add_edge(u1, u3);
  b.add_edge(a, u1);
  b.add_edge(a, u2);
  b.add_edge(bb, u3);
  MultiGraph g = b.finish();
  FormulaResult cut = thm510_factorize(g, CliqueCut{{u1, u2, u3}, {a}, {bb}, {}});
  Count cut_oracle = count_spanning_trees(g);
  v.check(cut.value == 8 && cut_oracle == 8, "K3-cut example: formula " + str(cut.value) + ", oracle " + to_string(cut_oracle));

  MultiGraph k4 = complete_graph(4);
  auto vs = k4.vertices();
  FormulaResult pendant = cor51_pendant_clique(k4, {vs[0].id, vs[1].id, vs[2].id}, vs[3].id);
  Count k4_oracle = count_spanning_trees(k4);
  v.check(pendant.value == 16 && k4_oracle == 16,
          "K4 pendant-clique example: formula " + str(pendant.value) + ", oracle " + to_string(k4_oracle));
  return v;
}

Verdict reductions() {
  Verdict v;
  campaign(v, "lemma22", 100, 9001);
  campaign(v, "lemma23", 100, 9002);
  campaign(v, "lemma55", 100, 9003);
  return v;
}

Verdict tutte() {
  Verdict v;
  std::size_t failures = 0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    MultiGraph g = gen_connected_multigraph(trial_seed(10010, t), 8, 12, 2);
    TuttePolynomial poly = tutte_polynomial(g);
    bool ok = evaluate(poly, 1, 1) == Rational(count_spanning_trees(g)) &&
              evaluate(poly, 2, 2) == Rational(power(Count(2), g.edge_count()));
    if (!ok) ++failures;
  }
  v.check(failures == 0, "T(1,1) = tau and T(2,2) = 2^|E| on 100 graphs: " + std::to_string(failures) + " failures");

  auto known = tutte_cut_experiment(10011, 50, {{1, 1}, {2, 2}});
  for (const IdentityReport& r : known) {
    v.check(r.trials == 50 && r.equal_count == 50, "cut identity at (" + str(r.x) + "," + str(r.y) + "): " +
                                                       std::to_string(r.equal_count) + " of " +
                                                       std::to_string(r.trials) + " equal");
  }

  auto open = tutte_cut_experiment(10012, 100, {{0, -1}});
  nlohmann::json j = open.at(0).to_json();
  bool shaped = j.at("point") == "0,-1" && j.at("trials") == 100 && j.at("counterexamples").is_array() &&
                j.at("equal_count").get<std::size_t>() + j.at("counterexamples").size() == 100;
  for (const auto& c : j.at("counterexamples")) {
    shaped = shaped && c.contains("graph") && c.contains("cut") && c.contains("lhs") && c.contains("rhs");
  }
  v.check(shaped, "experiment at (0,-1) report well formed");
  v.note("open question data: " + std::to_string(j.at("equal_count").get<std::size_t>()) + " of 100 equal at (0,-1)");
  return v;
}

struct Criterion {
  int number;
  std::string title;
  double limit_ms;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Cayley n^(n-2), n = 2..9", 1'000, cayley},
      {2, "forest-constrained counts in K_n, every forest, n = 4..6", 60'000, moon_exhaustive},
      {3, "oracle self-consistency on 300 multigraphs", 0, oracle_consistency},
      {4, "line graph tree counts", 0, line_graphs},
      {5, "clique partition theorems, 200 instances each", 0, partition_theorems},
      {6, "weight reduction over parallel classes", 0, circ_machinery},
      {7, "clique edge partitions, middle and line graphs", 0, theorem54_family},
      {8, "clique cut-set factorization", 0, cut_factorization},
      {9, "star, contraction and splitting reductions", 0, reductions},
      {10, "Tutte polynomial checks and experiment", 0, tutte},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    auto start = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.check(false, std::string("uncaught exception: ") + e.what());
    }
    double elapsed = ms_since(start);
    if (c.limit_ms > 0) {
      v.check(elapsed < c.limit_ms, "time " + std::to_string(static_cast<long>(elapsed)) + " ms under limit " +
                                       std::to_string(static_cast<long>(c.limit_ms)) + " ms");
    }
    std::printf("AC%-2d %s  %s (%ld ms)\n", c.number, v.pass ? "PASS" : "FAIL", c.title.c_str(),
                static_cast<long>(elapsed));
    for (const std::string& n : v.notes) std::printf("       %s\n", n.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
