#include "treecount/graph.hpp"

#include <algorithm>
#include <iterator>

#include "treecount/error.hpp"
#include "treecount/union_find.hpp"

namespace treecount {

// MultiGraph ---------------------------------------------------------------

MultiGraph MultiGraph::build(const std::vector<std::string>& vertices,
                             const std::vector<EdgeSpec>& edges) {
  GraphBuilder builder;
  std::unordered_map<std::string, VertexId> by_name;
  for (const auto& name : vertices) {
    if (by_name.contains(name)) throw Error(ErrorKind::Parse, "duplicate vertex '" + name + "'");
    by_name.emplace(name, builder.add_vertex(name));
  }
  std::set<std::string> labels;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& spec = edges[i];
    auto a = by_name.find(spec.a);
    if (a == by_name.end()) throw Error(ErrorKind::UnknownVertex, spec.a);
    auto b = by_name.find(spec.b);
    if (b == by_name.end()) throw Error(ErrorKind::UnknownVertex, spec.b);
    std::string label = spec.label.empty() ? "e" + std::to_string(i + 1) : spec.label;
    if (a->second == b->second) throw Error(ErrorKind::SelfLoop, label + " at " + spec.a);
    if (!labels.insert(label).second) throw Error(ErrorKind::Parse, "duplicate edge label '" + label + "'");
    builder.add_edge(a->second, b->second, label);
  }
  return builder.finish();
}

const Vertex& MultiGraph::vertex(VertexId v) const { return vertices_[index_of(v)]; }

const Edge& MultiGraph::edge(EdgeId e) const { return edges_[index_of(e)]; }

std::size_t MultiGraph::index_of(VertexId v) const {
  auto it = vertex_index_.find(v.value);
  if (it == vertex_index_.end()) throw Error(ErrorKind::UnknownVertex, "#" + std::to_string(v.value));
  return it->second;
}

std::size_t MultiGraph::index_of(EdgeId e) const {
  auto it = edge_index_.find(e.value);
  if (it == edge_index_.end()) throw Error(ErrorKind::UnknownEdge, "#" + std::to_string(e.value));
  return it->second;
}

std::optional<VertexId> MultiGraph::find_vertex(std::string_view name) const {
  for (const auto& v : vertices_) {
    if (v.name == name) return v.id;
  }
  return std::nullopt;
}

std::optional<EdgeId> MultiGraph::find_edge(std::string_view label) const {
  for (const auto& e : edges_) {
    if (e.label == label) return e.id;
  }
  return std::nullopt;
}

VertexId MultiGraph::vertex_named(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw Error(ErrorKind::UnknownVertex, std::string(name));
}

EdgeId MultiGraph::edge_labeled(std::string_view label) const {
  if (auto e = find_edge(label)) return *e;
  throw Error(ErrorKind::UnknownEdge, std::string(label));
}

std::span<const EdgeId> MultiGraph::incident_edges(VertexId v) const {
  return incidence_[index_of(v)];
}

std::size_t MultiGraph::multiplicity(VertexId u, VertexId v) const {
  std::size_t count = 0;
  for (EdgeId e : incident_edges(u)) {
    if (edge(e).other(u) == v) ++count;
  }
  return count;
}

VertexSet MultiGraph::vertex_set() const {
  VertexSet out;
  for (const auto& v : vertices_) out.insert(v.id);
  return out;
}

EdgeSet MultiGraph::edge_set() const {
  EdgeSet out;
  for (const auto& e : edges_) out.insert(e.id);
  return out;
}

bool operator==(const MultiGraph& lhs, const MultiGraph& rhs) {
  if (lhs.vertices_.size() != rhs.vertices_.size() || lhs.edges_.size() != rhs.edges_.size()) return false;
  for (std::size_t i = 0; i < lhs.vertices_.size(); ++i) {
    if (lhs.vertices_[i].id != rhs.vertices_[i].id || lhs.vertices_[i].name != rhs.vertices_[i].name) return false;
  }
  for (std::size_t i = 0; i < lhs.edges_.size(); ++i) {
    const Edge& x = lhs.edges_[i];
    const Edge& y = rhs.edges_[i];
    if (x.id != y.id || x.a != y.a || x.b != y.b || x.label != y.label) return false;
  }
  return true;
}

// GraphBuilder -------------------------------------------------------------

GraphBuilder::GraphBuilder(const MultiGraph& base)
    : vertices_(base.vertices_.begin(), base.vertices_.end()),
      edges_(base.edges_.begin(), base.edges_.end()),
      next_vertex_id_(base.next_vertex_id_),
      next_edge_id_(base.next_edge_id_) {
  for (const auto& v : vertices_) vertex_names_.insert(v.name);
  for (const auto& e : edges_) edge_labels_.insert(e.label);
}

std::string GraphBuilder::unique_vertex_name(std::string name) const {
  if (name.empty()) name = "v" + std::to_string(vertices_.size() + 1);
  if (!vertex_names_.contains(name)) return name;
  for (std::size_t k = 2;; ++k) {
    std::string candidate = name + "_" + std::to_string(k);
    if (!vertex_names_.contains(candidate)) return candidate;
  }
}

std::string GraphBuilder::unique_edge_label(std::string label) const {
  if (label.empty()) {
    for (std::size_t k = edges_.size() + 1;; ++k) {
      std::string candidate = "e" + std::to_string(k);
      if (!edge_labels_.contains(candidate)) return candidate;
    }
  }
  if (!edge_labels_.contains(label)) return label;
  for (std::size_t k = 2;; ++k) {
    std::string candidate = label + "_" + std::to_string(k);
    if (!edge_labels_.contains(candidate)) return candidate;
  }
}

VertexId GraphBuilder::add_vertex(std::string name) {
  return add_vertex_with_id(VertexId{next_vertex_id_}, std::move(name));
}

VertexId GraphBuilder::add_vertex_with_id(VertexId id, std::string name) {
  if (has_vertex(id)) throw Error(ErrorKind::InvalidArgument, "vertex id reused");
  name = unique_vertex_name(std::move(name));
  vertex_names_.insert(name);
  vertices_.push_back({id, std::move(name)});
  next_vertex_id_ = std::max(next_vertex_id_, id.value + 1);
  return id;
}

EdgeId GraphBuilder::add_edge(VertexId a, VertexId b, std::string label) {
  return add_edge_with_id(EdgeId{next_edge_id_}, a, b, std::move(label));
}

EdgeId GraphBuilder::add_edge_with_id(EdgeId id, VertexId a, VertexId b, std::string label) {
  if (!has_vertex(a)) throw Error(ErrorKind::UnknownVertex, "#" + std::to_string(a.value));
  if (!has_vertex(b)) throw Error(ErrorKind::UnknownVertex, "#" + std::to_string(b.value));
  label = unique_edge_label(std::move(label));
  if (a == b) throw Error(ErrorKind::SelfLoop, label);
  edge_labels_.insert(label);
  edges_.push_back({id, a, b, std::move(label)});
  next_edge_id_ = std::max(next_edge_id_, id.value + 1);
  return id;
}

void GraphBuilder::remove_edge(EdgeId e) {
  auto it = std::find_if(edges_.begin(), edges_.end(), [&](const Edge& x) { return x.id == e; });
  if (it == edges_.end()) throw Error(ErrorKind::UnknownEdge, "#" + std::to_string(e.value));
  edge_labels_.erase(it->label);
  edges_.erase(it);
}

void GraphBuilder::move_endpoint(EdgeId e, VertexId from, VertexId to) {
  auto it = std::find_if(edges_.begin(), edges_.end(), [&](const Edge& x) { return x.id == e; });
  if (it == edges_.end()) throw Error(ErrorKind::UnknownEdge, "#" + std::to_string(e.value));
  if (it->a == from) {
    it->a = to;
  } else if (it->b == from) {
    it->b = to;
  } else {
    throw Error(ErrorKind::InvalidArgument, "edge " + it->label + " does not touch the vertex");
  }
  if (it->a == it->b) throw Error(ErrorKind::SelfLoop, it->label);
}

bool GraphBuilder::has_vertex(VertexId v) const {
  return std::any_of(vertices_.begin(), vertices_.end(), [&](const Vertex& x) { return x.id == v; });
}

const Vertex& GraphBuilder::vertex(VertexId v) const {
  auto it = std::find_if(vertices_.begin(), vertices_.end(), [&](const Vertex& x) { return x.id == v; });
  if (it == vertices_.end()) throw Error(ErrorKind::UnknownVertex, "#" + std::to_string(v.value));
  return *it;
}

std::vector<EdgeId> GraphBuilder::incident_edges(VertexId v) const {
  std::vector<EdgeId> out;
  for (const auto& e : edges_) {
    if (e.touches(v)) out.push_back(e.id);
  }
  return out;
}

MultiGraph GraphBuilder::finish() const {
  MultiGraph g;
  g.vertices_ = vertices_;
  g.edges_ = edges_;
  g.next_vertex_id_ = next_vertex_id_;
  g.next_edge_id_ = next_edge_id_;
  g.incidence_.resize(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) g.vertex_index_.emplace(vertices_[i].id.value, i);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    g.edge_index_.emplace(e.id.value, i);
    g.incidence_[g.vertex_index_.at(e.a.value)].push_back(e.id);
    g.incidence_[g.vertex_index_.at(e.b.value)].push_back(e.id);
  }
  return g;
}

// ContractionMap -----------------------------------------------------------

VertexId ContractionMap::operator()(VertexId v) const {
  auto it = vertex_map.find(v);
  if (it == vertex_map.end()) throw Error(ErrorKind::UnknownVertex, "#" + std::to_string(v.value));
  return it->second;
}

ContractionMap ContractionMap::then(const ContractionMap& next) const {
  ContractionMap out;
  for (const auto& [from, to] : vertex_map) out.vertex_map.emplace(from, next(to));
  out.dropped = set_union(dropped, next.dropped);
  return out;
}

// Operations ---------------------------------------------------------------

namespace {

void require_edges(const MultiGraph& g, const EdgeSet& es) {
  for (EdgeId e : es) {
    if (!g.has_edge(e)) throw Error(ErrorKind::UnknownEdge, "#" + std::to_string(e.value));
  }
}

void require_vertices(const MultiGraph& g, const VertexSet& vs) {
  for (VertexId v : vs) {
    if (!g.has_vertex(v)) throw Error(ErrorKind::UnknownVertex, "#" + std::to_string(v.value));
  }
}

}  // namespace

MultiGraph delete_edges(const MultiGraph& g, const EdgeSet& removed) {
  require_edges(g, removed);
  GraphBuilder builder(g);
  for (EdgeId e : removed) builder.remove_edge(e);
  return builder.finish();
}

MultiGraph delete_vertices(const MultiGraph& g, const VertexSet& removed) {
  require_vertices(g, removed);
  return induced_subgraph(g, set_difference(g.vertex_set(), removed));
}

Contraction contract_edges(const MultiGraph& g, const EdgeSet& contracted) {
  require_edges(g, contracted);
  UnionFind uf(g.vertex_count());
  for (EdgeId e : contracted) {
    const Edge& edge = g.edge(e);
    uf.unite(g.index_of(edge.a), g.index_of(edge.b));
  }
  // Representative of each class: its first vertex in iteration order.
  std::vector<std::size_t> rep(g.vertex_count(), g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    std::size_t root = uf.find(i);
    if (rep[root] == g.vertex_count()) rep[root] = i;
  }

  Contraction out;
  GraphBuilder builder;
  auto vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::size_t r = rep[uf.find(i)];
    if (r == i) builder.add_vertex_with_id(vs[i].id, vs[i].name);
    out.map.vertex_map.emplace(vs[i].id, vs[r].id);
  }
  for (const Edge& e : g.edges()) {
    VertexId a = out.map(e.a);
    VertexId b = out.map(e.b);
    if (a == b) {
      out.map.dropped.insert(e.id);
      continue;
    }
    builder.add_edge_with_id(e.id, a, b, e.label);
  }
  out.graph = builder.finish();
  return out;
}

MultiGraph induced_subgraph(const MultiGraph& g, const VertexSet& kept) {
  require_vertices(g, kept);
  GraphBuilder builder;
  for (const Vertex& v : g.vertices()) {
    if (kept.contains(v.id)) builder.add_vertex_with_id(v.id, v.name);
  }
  for (const Edge& e : g.edges()) {
    if (kept.contains(e.a) && kept.contains(e.b)) builder.add_edge_with_id(e.id, e.a, e.b, e.label);
  }
  return builder.finish();
}

EdgeSet inner_edges(const MultiGraph& g, const VertexSet& u) {
  require_vertices(g, u);
  EdgeSet out;
  for (const Edge& e : g.edges()) {
    if (u.contains(e.a) && u.contains(e.b)) out.insert(e.id);
  }
  return out;
}

EdgeSet edges_between(const MultiGraph& g, const VertexSet& u1, const VertexSet& u2) {
  require_vertices(g, u1);
  require_vertices(g, u2);
  EdgeSet out;
  for (const Edge& e : g.edges()) {
    if ((u1.contains(e.a) && u2.contains(e.b)) || (u1.contains(e.b) && u2.contains(e.a))) out.insert(e.id);
  }
  return out;
}

EdgeSet boundary(const MultiGraph& g, const VertexSet& u) {
  require_vertices(g, u);
  EdgeSet out;
  for (const Edge& e : g.edges()) {
    if (u.contains(e.a) != u.contains(e.b)) out.insert(e.id);
  }
  return out;
}

VertexSet neighborhood(const MultiGraph& g, const VertexSet& vs) {
  require_vertices(g, vs);
  VertexSet out;
  for (VertexId v : vs) {
    for (EdgeId e : g.incident_edges(v)) out.insert(g.edge(e).other(v));
  }
  return out;
}

VertexSet closed_neighborhood(const MultiGraph& g, const VertexSet& vs) {
  return set_union(vs, neighborhood(g, vs));
}

VertexSet endpoints(const MultiGraph& g, const EdgeSet& es) {
  require_edges(g, es);
  VertexSet out;
  for (EdgeId e : es) {
    out.insert(g.edge(e).a);
    out.insert(g.edge(e).b);
  }
  return out;
}

EdgeSet incident_within(const MultiGraph& g, VertexId v, const EdgeSet& within) {
  EdgeSet out;
  for (EdgeId e : g.incident_edges(v)) {
    if (within.contains(e)) out.insert(e);
  }
  return out;
}

bool is_forest(const MultiGraph& g, const EdgeSet& es) {
  require_edges(g, es);
  UnionFind uf(g.vertex_count());
  for (EdgeId e : es) {
    const Edge& edge = g.edge(e);
    if (!uf.unite(g.index_of(edge.a), g.index_of(edge.b))) return false;
  }
  return true;
}

std::vector<VertexSet> components(const MultiGraph& g) {
  UnionFind uf(g.vertex_count());
  for (const Edge& e : g.edges()) uf.unite(g.index_of(e.a), g.index_of(e.b));
  std::vector<VertexSet> out;
  std::vector<std::size_t> slot(g.vertex_count(), g.vertex_count());
  auto vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::size_t root = uf.find(i);
    if (slot[root] == g.vertex_count()) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].insert(vs[i].id);
  }
  return out;
}

bool is_connected(const MultiGraph& g) { return g.vertex_count() > 0 && components(g).size() == 1; }

std::vector<EdgeSet> edge_components(const MultiGraph& g, const EdgeSet& es) {
  require_edges(g, es);
  UnionFind uf(g.vertex_count());
  for (EdgeId e : es) uf.unite(g.index_of(g.edge(e).a), g.index_of(g.edge(e).b));
  std::map<std::size_t, EdgeSet> by_root;
  std::vector<std::size_t> order;
  for (EdgeId e : es) {
    std::size_t root = uf.find(g.index_of(g.edge(e).a));
    if (!by_root.contains(root)) order.push_back(root);
    by_root[root].insert(e);
  }
  std::vector<EdgeSet> out;
  for (std::size_t root : order) out.push_back(std::move(by_root[root]));
  return out;
}

bool is_clique(const MultiGraph& g, const VertexSet& u) {
  require_vertices(g, u);
  for (auto i = u.begin(); i != u.end(); ++i) {
    for (auto j = std::next(i); j != u.end(); ++j) {
      if (g.multiplicity(*i, *j) != 1) return false;
    }
  }
  return true;
}

bool is_regular(const MultiGraph& g, std::size_t r) {
  for (const Vertex& v : g.vertices()) {
    if (g.degree(v.id) != r) return false;
  }
  return true;
}

VertexSet vertices_named(const MultiGraph& g, const std::vector<std::string>& names) {
  VertexSet out;
  for (const auto& n : names) out.insert(g.vertex_named(n));
  return out;
}

EdgeSet edges_labeled(const MultiGraph& g, const std::vector<std::string>& labels) {
  EdgeSet out;
  for (const auto& l : labels) out.insert(g.edge_labeled(l));
  return out;
}

std::vector<std::string> names_of(const MultiGraph& g, const VertexSet& vs) {
  std::vector<std::string> out;
  for (const Vertex& v : g.vertices()) {
    if (vs.contains(v.id)) out.push_back(v.name);
  }
  return out;
}

std::vector<std::string> labels_of(const MultiGraph& g, const EdgeSet& es) {
  std::vector<std::string> out;
  for (const Edge& e : g.edges()) {
    if (es.contains(e.id)) out.push_back(e.label);
  }
  return out;
}

namespace {

template <typename Set, typename Op>
Set combine(const Set& a, const Set& b, Op op) {
  Set out;
  op(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

}  // namespace

EdgeSet set_union(const EdgeSet& a, const EdgeSet& b) {
  return combine(a, b, [](auto... args) { return std::set_union(args...); });
}
EdgeSet set_difference(const EdgeSet& a, const EdgeSet& b) {
  return combine(a, b, [](auto... args) { return std::set_difference(args...); });
}
EdgeSet set_intersection(const EdgeSet& a, const EdgeSet& b) {
  return combine(a, b, [](auto... args) { return std::set_intersection(args...); });
}
VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  return combine(a, b, [](auto... args) { return std::set_union(args...); });
}
VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  return combine(a, b, [](auto... args) { return std::set_difference(args...); });
}
VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  return combine(a, b, [](auto... args) { return std::set_intersection(args...); });
}

MultiGraph complete_graph(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({names[i], names[j], {}});
  }
  return MultiGraph::build(names, edges);
}

MultiGraph cycle_graph(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({names[i], names[(i + 1) % n], {}});
  return MultiGraph::build(names, edges);
}

MultiGraph path_graph(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({names[i], names[i + 1], {}});
  return MultiGraph::build(names, edges);
}

}  // namespace treecount
