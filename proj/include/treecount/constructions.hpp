#pragma once

#include <map>
#include <optional>
#include <vector>

#include "treecount/error.hpp"
#include "treecount/graph.hpp"
#include "treecount/kirchhoff.hpp"

namespace treecount {

// Partitions ---------------------------------------------------------------

/// V0 together with cliques V1..Vk. M and M_i are derived from a host graph.
struct CliquePartition {
  VertexSet v0;
  std::vector<VertexSet> cliques;

  /// V1 + ... + Vk.
  VertexSet clique_union() const;
  /// Index of the clique holding v, if any.
  std::optional<std::size_t> clique_of(VertexId v) const;

  /// Union of E(V0, Vi) over all i.
  EdgeSet m(const MultiGraph& g) const;
  /// E(Vi, V0).
  EdgeSet m_i(const MultiGraph& g, std::size_t i) const;

  /// Partition, clique, (a) no edges between distinct cliques, (b) every
  /// clique vertex meets at most one M edge, and connectivity.
  HypothesisReport check(const MultiGraph& g) const;
};

/// Cliques as given; V0 is whatever is left.
CliquePartition make_partition(const MultiGraph& g, std::vector<VertexSet> cliques);

/// Clique U whose removal leaves S1 and S2 with disjoint closed neighborhoods.
struct CliqueCut {
  VertexSet u;
  VertexSet s1;
  VertexSet s2;
  EdgeSet w;

  EdgeSet w1(const MultiGraph& g) const;
  EdgeSet w2(const MultiGraph& g) const;

  HypothesisReport check(const MultiGraph& g) const;
};

// Graph operators ----------------------------------------------------------

struct StarResult {
  MultiGraph graph;
  EdgeSet new_edges;
  /// One center per component of G[W], in component order.
  std::vector<VertexId> centers;
  std::vector<EdgeSet> components;
};

/// G*W: a new vertex per component of G[W], joined to each of its vertices.
/// Throws EmptyEdgeSet when W is empty.
StarResult star_graph(const MultiGraph& g, const EdgeSet& w);

/// G/E(G[U]). Each component of G[U] collapses onto its first vertex.
Contraction bullet_contract(const MultiGraph& g, const VertexSet& u);
/// Identifies the vertices of each part separately; edges between two parts
/// survive even when both parts lie in U.
Contraction bullet_contract_parts(const MultiGraph& g, const std::vector<VertexSet>& parts);

/// The vertex each clique collapses onto in a bullet contraction.
std::vector<VertexId> clique_images(const Contraction& c, const CliquePartition& p);

struct SplitResult {
  MultiGraph graph;
  VertexId new_vertex;
  EdgeId new_edge;
};

/// v keeps `kept`; the rest of its edges move to a new vertex v' and a new
/// edge vv' is added.
SplitResult vertex_split(const MultiGraph& g, VertexId v, const EdgeSet& kept);

struct DiamondSubgraphResult {
  MultiGraph graph;
  EdgeSet new_edges;
};

/// Splits every vertex of the subgraph (vs, es) whose edges in G are not all
/// in `es`, in vertex order.
DiamondSubgraphResult diamond_subgraph(const MultiGraph& g, const VertexSet& vs, const EdgeSet& es);

struct DiamondPartition {
  MultiGraph graph;
  /// The star edges joining centers to copies.
  EdgeSet new_edges;
  /// Original vertex -> its center, for vertices touching two or more parts.
  std::map<VertexId, VertexId> centers;
  /// Per part: original vertex -> copy.
  std::vector<std::map<VertexId, VertexId>> copies;
  std::vector<VertexSet> part_vertices;
  /// The graph with every original edge contracted.
  MultiGraph quotient;
  /// Quotient vertex of each part.
  std::vector<VertexId> part_nodes;
};

/// Separates the parts of an edge partition. A vertex whose edges all lie in
/// one part is left alone; any other vertex gets one copy per part it touches
/// plus a center joined to those copies. Throws NotAPartition.
DiamondPartition diamond_partition(const MultiGraph& g, const std::vector<EdgeSet>& parts);

/// The clique weighting on E(G.U): |Vi| on M_i in R, |Vi|/(1+|Vi|) on M_i
/// outside R, 1 elsewhere.
EdgeWeighting omega_weighting(const MultiGraph& g, const CliquePartition& p, const EdgeSet& r);

struct CircReduced {
  /// G.U
  Contraction bullet;
  /// G.U with each class E(v_i, w) & R and E(v_i, w) - R cut down to its
  /// lowest-id edge.
  MultiGraph graph;
  /// Weights on `graph`, absorbing the class sizes.
  EdgeWeighting weights;
  /// The unreduced weighting on G.U.
  EdgeWeighting omega;
};

/// Throws HypothesisViolated if the partition fails its checks or R is not
/// inside M.
CircReduced circ_reduce(const MultiGraph& g, const CliquePartition& p, const EdgeSet& r);

struct LineGraph {
  MultiGraph graph;
  /// Source edge -> line vertex.
  std::map<EdgeId, VertexId> vertex_of;
  /// Line edge -> the shared source vertex it passes through.
  std::map<EdgeId, VertexId> via;
};

/// One vertex per edge of H; one edge per shared endpoint, so parallel edges
/// of H give a doubled adjacency.
LineGraph line_graph(const MultiGraph& h);

struct MiddleGraph {
  MultiGraph graph;
  std::map<EdgeId, VertexId> edge_vertex;
  std::map<VertexId, VertexId> original_vertex;
  /// Per source vertex u: the clique on u and its edge-vertices.
  std::vector<EdgeSet> parts;
};

MiddleGraph middle_graph(const MultiGraph& h);

struct Subdivision {
  MultiGraph graph;
  /// Source vertices keep their ids; source edge -> its subdivision vertex.
  std::map<EdgeId, VertexId> midpoint;
};

Subdivision subdivision(const MultiGraph& h);

/// Edge partition of L(H) into the cliques E_H(u) for each u of degree >= 2.
std::vector<EdgeSet> line_graph_cliques(const MultiGraph& h, const LineGraph& l);

struct Reduction {
  MultiGraph graph;
  CliquePartition partition;
  /// Star edges; equals M' + N' below.
  EdgeSet w_prime;
  EdgeSet m_prime;
  EdgeSet n_prime;
  HypothesisReport certificate;
};

/// G' = G*W - M with V0' = V0 plus the star centers. Requires M, the edges
/// between distinct parts, to lie in W and G[W] to be a forest.
Reduction reduce_to_special_case(const MultiGraph& g, const std::vector<VertexSet>& cliques,
                                 const EdgeSet& w);

}  // namespace treecount
