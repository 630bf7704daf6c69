#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace treecount {

struct VertexId {
  std::uint32_t value = 0;
  friend auto operator<=>(VertexId, VertexId) = default;
};

struct EdgeId {
  std::uint32_t value = 0;
  friend auto operator<=>(EdgeId, EdgeId) = default;
};

using VertexSet = std::set<VertexId>;
using EdgeSet = std::set<EdgeId>;

struct Vertex {
  VertexId id;
  std::string name;
};

struct Edge {
  EdgeId id;
  VertexId a;
  VertexId b;
  std::string label;

  VertexId other(VertexId v) const { return v == a ? b : a; }
  bool touches(VertexId v) const { return a == v || b == v; }
};

/// Input record for MultiGraph::build. An empty label means "positional".
struct EdgeSpec {
  std::string a;
  std::string b;
  std::string label;
};

class GraphBuilder;

/// Loopless multigraph with stable vertex and edge identities.
///
/// Instances are immutable: every operation in this library takes a graph by
/// const reference and returns a new one. Iteration order over vertices and
/// edges is insertion order.
class MultiGraph {
 public:
  MultiGraph() = default;

  /// Builds a graph from named vertices and an edge list. Vertex ids follow
  /// input order, as do edge ids; unlabeled edges are labeled e1, e2, ... by
  /// position. Throws SelfLoop, UnknownVertex, or Parse (duplicate names).
  static MultiGraph build(const std::vector<std::string>& vertices,
                          const std::vector<EdgeSpec>& edges);

  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(VertexId v) const { return vertex_index_.contains(v.value); }
  bool has_edge(EdgeId e) const { return edge_index_.contains(e.value); }

  const Vertex& vertex(VertexId v) const;
  const Edge& edge(EdgeId e) const;

  /// Dense position of a vertex/edge in iteration order.
  std::size_t index_of(VertexId v) const;
  std::size_t index_of(EdgeId e) const;

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view label) const;
  VertexId vertex_named(std::string_view name) const;
  EdgeId edge_labeled(std::string_view label) const;

  /// E_G(v), in edge order.
  std::span<const EdgeId> incident_edges(VertexId v) const;
  std::size_t degree(VertexId v) const { return incident_edges(v).size(); }
  std::size_t multiplicity(VertexId u, VertexId v) const;

  VertexSet vertex_set() const;
  EdgeSet edge_set() const;

  std::uint32_t next_vertex_id() const { return next_vertex_id_; }
  std::uint32_t next_edge_id() const { return next_edge_id_; }

  friend bool operator==(const MultiGraph& lhs, const MultiGraph& rhs);

 private:
  friend class GraphBuilder;

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint32_t, std::size_t> vertex_index_;
  std::unordered_map<std::uint32_t, std::size_t> edge_index_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::uint32_t next_vertex_id_ = 0;
  std::uint32_t next_edge_id_ = 0;
};

/// Assembles a MultiGraph. Starting from an existing graph keeps every id.
class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(const MultiGraph& base);

  /// Adds a vertex with a fresh id. The name is made unique by suffixing.
  VertexId add_vertex(std::string name);
  VertexId add_vertex_with_id(VertexId id, std::string name);

  /// Adds an edge with a fresh id. Empty labels get a fresh positional label.
  EdgeId add_edge(VertexId a, VertexId b, std::string label = {});
  EdgeId add_edge_with_id(EdgeId id, VertexId a, VertexId b, std::string label);

  void remove_edge(EdgeId e);
  /// Re-attaches the `from` end of `e` to `to`; the other end is untouched.
  void move_endpoint(EdgeId e, VertexId from, VertexId to);

  bool has_vertex(VertexId v) const;
  const Vertex& vertex(VertexId v) const;
  std::vector<EdgeId> incident_edges(VertexId v) const;

  MultiGraph finish() const;

 private:
  std::string unique_vertex_name(std::string name) const;
  std::string unique_edge_label(std::string label) const;

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::set<std::string> vertex_names_;
  std::set<std::string> edge_labels_;
  std::uint32_t next_vertex_id_ = 0;
  std::uint32_t next_edge_id_ = 0;
};

/// Old-vertex -> new-vertex map produced by a contraction. Surviving edges
/// keep their ids; every edge that ends up as a loop, the contracted ones
/// included, is listed in `dropped`.
struct ContractionMap {
  std::map<VertexId, VertexId> vertex_map;
  EdgeSet dropped;

  VertexId operator()(VertexId v) const;
  /// The map for "this contraction, then `next`".
  ContractionMap then(const ContractionMap& next) const;
};

struct Contraction {
  MultiGraph graph;
  ContractionMap map;
};

// Set operators ------------------------------------------------------------

/// G - E'.
MultiGraph delete_edges(const MultiGraph& g, const EdgeSet& removed);

/// G - V' (the subgraph induced by the remaining vertices).
MultiGraph delete_vertices(const MultiGraph& g, const VertexSet& removed);

/// G/E'. Each component of G<E'> collapses onto its first vertex in
/// iteration order, which keeps its id and name.
Contraction contract_edges(const MultiGraph& g, const EdgeSet& contracted);

/// G[V'].
MultiGraph induced_subgraph(const MultiGraph& g, const VertexSet& kept);

/// E(G[U]).
EdgeSet inner_edges(const MultiGraph& g, const VertexSet& u);

/// E_G(U1, U2): edges with one end in U1 and the other in U2.
EdgeSet edges_between(const MultiGraph& g, const VertexSet& u1, const VertexSet& u2);

/// E_G(U) = E_G(U, V - U).
EdgeSet boundary(const MultiGraph& g, const VertexSet& u);

/// N_G(V') and N_G[V'] = V' + N_G(V').
VertexSet neighborhood(const MultiGraph& g, const VertexSet& vs);
VertexSet closed_neighborhood(const MultiGraph& g, const VertexSet& vs);

VertexSet endpoints(const MultiGraph& g, const EdgeSet& es);

/// E_{G}(v) restricted to `within`.
EdgeSet incident_within(const MultiGraph& g, VertexId v, const EdgeSet& within);

// Structural predicates ----------------------------------------------------

/// True iff the spanning subgraph G<E'> is acyclic.
bool is_forest(const MultiGraph& g, const EdgeSet& es);

std::vector<VertexSet> components(const MultiGraph& g);
bool is_connected(const MultiGraph& g);

/// Components of G[E'] as edge sets, ordered by their lowest edge id.
std::vector<EdgeSet> edge_components(const MultiGraph& g, const EdgeSet& es);

/// G[U] is complete and has no parallel edges.
bool is_clique(const MultiGraph& g, const VertexSet& u);

/// All vertices have degree r.
bool is_regular(const MultiGraph& g, std::size_t r);

// Convenience --------------------------------------------------------------

VertexSet vertices_named(const MultiGraph& g, const std::vector<std::string>& names);
EdgeSet edges_labeled(const MultiGraph& g, const std::vector<std::string>& labels);
std::vector<std::string> names_of(const MultiGraph& g, const VertexSet& vs);
std::vector<std::string> labels_of(const MultiGraph& g, const EdgeSet& es);

EdgeSet set_union(const EdgeSet& a, const EdgeSet& b);
EdgeSet set_difference(const EdgeSet& a, const EdgeSet& b);
EdgeSet set_intersection(const EdgeSet& a, const EdgeSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

/// K_n on vertices named 1..n (edges in lexicographic order).
MultiGraph complete_graph(std::size_t n);
/// C_n on vertices named 1..n.
MultiGraph cycle_graph(std::size_t n);
/// Path on vertices named 1..n.
MultiGraph path_graph(std::size_t n);

}  // namespace treecount
