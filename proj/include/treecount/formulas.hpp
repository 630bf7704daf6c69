#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treecount/constructions.hpp"
#include "treecount/enumerator.hpp"
#include "treecount/error.hpp"
#include "treecount/graph.hpp"
#include "treecount/numeric.hpp"

namespace treecount {

/// How tree sums on the right-hand sides are evaluated.
enum class Route { matrix_tree, enumeration };

/// Line-graph-via-subdivision: the uniform-exponent sum without prefactor, or
/// the form that actually equals the line graph's tree count.
enum class LsubMode { printed, corrected };

struct EvalOptions {
  Route route = Route::matrix_tree;
  std::size_t cap = kDefaultTreeCap;
  LsubMode mode = LsubMode::corrected;
};

struct FormulaResult {
  Rational value;
  /// Set when `value` is an integer.
  std::optional<Count> count;
  HypothesisReport report;
  /// Named intermediate quantities, as decimal strings.
  std::map<std::string, std::string> details;
};

/// Everything any formula may need. Each formula reads only its own fields.
struct FormulaInput {
  MultiGraph graph;
  CliquePartition partition;
  VertexSet u;
  VertexSet s1;
  VertexSet s2;
  std::optional<VertexId> w_vertex;
  EdgeSet w;
  EdgeSet n;
  EdgeSet r;
  EdgeSet m;
  std::vector<EdgeSet> edge_parts;
};

// Closed forms on complete graphs and line graphs ---------------------------

/// Trees of K_n through the forest M: n^(c-2) times the product of the
/// component orders, isolated vertices counted as components. Zero when M
/// has a cycle. `m` holds edge ids of complete_graph(n).
FormulaResult moon_count(std::size_t n, const EdgeSet& m);

/// Cliques covering V joined by a matching M0; evaluates to tau_G(M0).
FormulaResult thm12_matching(const MultiGraph& g, const std::vector<VertexSet>& cliques,
                             const EvalOptions& opts = {});

/// Tree count of L(H) from trees of H weighted by inverse degrees.
FormulaResult line_graph_formula(const MultiGraph& h, const EvalOptions& opts = {});

/// Tree count of L(H) for r-regular H.
FormulaResult regular_line_graph(const MultiGraph& h, const EvalOptions& opts = {});

// Clique contractions ------------------------------------------------------

/// tau_G(W) for W = E - E(G[U]) when G[W] is a forest.
FormulaResult prop31_count(const MultiGraph& g, const VertexSet& u);

/// tau_G(M + N) for M = E_G(U), via trees of G.U.
FormulaResult thm31_count(const MultiGraph& g, const VertexSet& u, const EdgeSet& n,
                          const EvalOptions& opts = {});

/// tau_G(M + N) for a clique partition, via trees of G.U.
FormulaResult thm42_count(const MultiGraph& g, const CliquePartition& p, const EdgeSet& n,
                          const EvalOptions& opts = {});

/// tau_G(R + N) for R inside M. The matrix-tree route uses the clique weighting.
FormulaResult thm53_count(const MultiGraph& g, const CliquePartition& p, const EdgeSet& r, const EdgeSet& n,
                          const EvalOptions& opts = {});

/// The same quantity summed over the class-reduced graph with absorbed weights.
FormulaResult thm53_reduced(const MultiGraph& g, const CliquePartition& p, const EdgeSet& r, const EdgeSet& n,
                            const EvalOptions& opts = {});

/// tau_G(N): the R = {} case.
FormulaResult cor531_count(const MultiGraph& g, const CliquePartition& p, const EdgeSet& n,
                           const EvalOptions& opts = {});

// Edge partitions into cliques ---------------------------------------------

/// tau_G from a partition of E(G) into complete subgraphs, via trees of the
/// bipartite quotient of the diamond construction.
FormulaResult thm54_count(const MultiGraph& g, const std::vector<EdgeSet>& parts, const EvalOptions& opts = {});

/// Tree count of the middle graph from trees of the subdivision.
FormulaResult middle_graph_count(const MultiGraph& h, const EvalOptions& opts = {});

/// Tree count of L(H) from trees of the subdivision.
FormulaResult line_graph_via_subdivision(const MultiGraph& h, const EvalOptions& opts = {});

// Clique cuts --------------------------------------------------------------

/// tau_G(W) as a product over the two sides of a clique cut. Details carry
/// the direct count and both side counts.
FormulaResult thm510_factorize(const MultiGraph& g, const CliqueCut& cut, const EvalOptions& opts = {});

/// tau_G from tau_{G-w} when w hangs off the clique U.
FormulaResult cor51_pendant_clique(const MultiGraph& g, const VertexSet& u, VertexId w,
                                   const EvalOptions& opts = {});

// Dispatch -----------------------------------------------------------------

const std::vector<std::string>& formula_ids();

/// Throws UnknownFormula, HypothesisViolated.
FormulaResult evaluate_formula(std::string_view id, const FormulaInput& in, const EvalOptions& opts = {});

/// The quantity the formula claims to equal, by direct Matrix-Tree counting.
Count formula_oracle(std::string_view id, const FormulaInput& in);

}  // namespace treecount
