#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "treecount/constructions.hpp"
#include "treecount/formulas.hpp"
#include "treecount/graph.hpp"
#include "treecount/io.hpp"
#include "treecount/tutte.hpp"

namespace treecount {

/// Seeded 64-bit generator. Ranges use `lo + next() % span` so that streams are
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [lo, hi].
  std::size_t uniform(std::size_t lo, std::size_t hi);
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return next() % den < num; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[uniform(0, i - 1)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Independent seed for trial `trial` of a campaign seeded with `base`.
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial);

// Generators ---------------------------------------------------------------

/// Connected loopless multigraph on 1..nmax vertices and at most
/// max(n-1, mmax) edges, no pair joined more than `multmax` times.
MultiGraph gen_connected_multigraph(Rng& rng, std::size_t nmax, std::size_t mmax, std::size_t multmax);
MultiGraph gen_connected_multigraph(std::uint64_t seed, std::size_t nmax, std::size_t mmax, std::size_t multmax);

/// Random acyclic subset of `pool`; each edge is offered with probability num/den.
EdgeSet random_forest(Rng& rng, const MultiGraph& g, const EdgeSet& pool, std::uint64_t num, std::uint64_t den);

struct PartitionBounds {
  std::size_t kmax = 3;
  std::size_t clique_max = 4;
  std::size_t v0max = 3;
  std::size_t v0_extra_edges = 2;
  std::size_t multmax = 2;
  /// Several vertices of one clique attach to the same V0 vertex.
  bool parallel_classes = false;
  bool single_clique = false;
};

struct PartitionInstance {
  MultiGraph graph;
  CliquePartition partition;
  EdgeSet n;
  EdgeSet r;
};

PartitionInstance gen_clique_partition_instance(Rng& rng, const PartitionBounds& b = {});

struct CutBounds {
  std::size_t umax = 4;
  std::size_t side_max = 3;
  std::size_t multmax = 2;
  /// Whole graph stays within this many edges (for the Tutte engine).
  std::size_t edge_cap = 14;
  /// S1 is a single vertex w adjacent only to U, with no parallel edges.
  bool pendant = false;
  bool with_w = true;
};

struct CutInstance {
  MultiGraph graph;
  CliqueCut cut;
  /// The pendant vertex when generated with `pendant`.
  std::optional<VertexId> w;
};

/// About half the non-pendant instances are two-sided: S1 and S2 both present,
/// each attached to its own part of U and often to two or more of its vertices.
CutInstance gen_clique_cut_instance(Rng& rng, const CutBounds& b = {});

struct EdgePartitionInstance {
  MultiGraph graph;
  std::vector<EdgeSet> parts;
};

/// A union of overlapping cliques; each clique's edges form one part.
EdgePartitionInstance gen_edge_clique_partition_instance(Rng& rng, std::size_t kmax = 4, std::size_t clique_max = 4);

/// Connected source graph for line/middle graph formulas.
MultiGraph gen_line_graph_source(Rng& rng, std::size_t nmax = 7, std::size_t mmax = 12, std::size_t multmax = 2);

/// Connected loopless r-regular multigraph on n vertices (configuration model).
MultiGraph gen_regular_multigraph(Rng& rng, std::size_t n, std::size_t r);

struct MatchingInstance {
  MultiGraph graph;
  std::vector<VertexSet> cliques;
};

/// Cliques covering V, joined by a matching.
MatchingInstance gen_matching_instance(Rng& rng, std::size_t kmax = 4, std::size_t clique_max = 4);

/// U clique plus a forest W = E - E(G[U]).
struct CliqueForestInstance {
  MultiGraph graph;
  VertexSet u;
};

CliqueForestInstance gen_clique_forest_instance(Rng& rng, std::size_t umax = 4, std::size_t outside_max = 4);

struct ReductionInstance {
  MultiGraph graph;
  std::vector<VertexSet> cliques;
  EdgeSet w;
};

/// Cliques and V0 with W a forest containing every edge between parts.
ReductionInstance gen_reduction_instance(Rng& rng, std::size_t kmax = 3, std::size_t clique_max = 3,
                                         std::size_t v0max = 3);

/// Random partition of E(G) into at most `kmax` non-empty parts.
std::vector<EdgeSet> random_edge_partition(Rng& rng, const MultiGraph& g, std::size_t kmax);

// Instances on the command line and in reports ------------------------------

/// Resolves names and labels against `g`. A missing V0 is "everything not in a
/// clique"; a missing S2 is "everything not in U or S1"; a missing U is the
/// single clique when exactly one is given.
FormulaInput resolve_input(const MultiGraph& g, const PartitionSpec& spec);

nlohmann::json input_to_json(const FormulaInput& in);

// Campaigns ----------------------------------------------------------------

enum class InstanceKind { plain, clique_partition, clique_cut, edge_clique_partition, line_graph_source };

struct InstanceSpec {
  InstanceKind kind = InstanceKind::plain;
  std::size_t nmax = 7;
  std::size_t mmax = 12;
  std::size_t multmax = 2;
  std::uint64_t seed = 1;
  bool parallel_classes = false;
  LsubMode mode = LsubMode::corrected;
  /// When set, graph-only formulas use this graph in every trial.
  std::optional<MultiGraph> graph;
  /// Attempts per trial when an instance exceeds the enumeration cap.
  std::size_t regenerate_budget = 8;
};

struct Failure {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  nlohmann::json instance;
  std::string message;
};

struct VerificationReport {
  std::string id;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<Failure> failures;
  /// Trials skipped because every regeneration exceeded the cap.
  std::size_t skipped = 0;
  double elapsed_ms = 0;

  bool pass() const { return failures.empty(); }
  nlohmann::json to_json(bool with_timing = true) const;
};

/// Formula ids plus: oracle, lemma22, lemma23, lemma55, circ.
const std::vector<std::string>& campaign_ids();

/// Throws UnknownFormula.
VerificationReport run_campaign(std::string_view id, const InstanceSpec& spec, std::size_t trials);

// Tutte cut identity experiment ---------------------------------------------

struct IdentityReport {
  Rational x;
  Rational y;
  std::size_t trials = 0;
  std::size_t equal_count = 0;
  nlohmann::json counterexamples = nlohmann::json::array();

  nlohmann::json to_json() const;
};

/// Evaluates the clique-cut Tutte identity at each point on `trials`
/// generated clique-cut instances. Mismatches are data, not errors.
std::vector<IdentityReport> tutte_cut_experiment(std::uint64_t seed, std::size_t trials,
                                                 const std::vector<std::pair<Rational, Rational>>& points,
                                                 const CutBounds& bounds = {});

}  // namespace treecount
