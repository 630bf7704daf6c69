#include "treecount/constructions.hpp"

#include <algorithm>
#include <tuple>

#include "treecount/union_find.hpp"

namespace treecount {

namespace {

std::string join_names(const MultiGraph& g, const VertexSet& vs) {
  std::string out;
  for (const auto& n : names_of(g, vs)) out += (out.empty() ? "" : ",") + n;
  return out;
}

std::string join_labels(const MultiGraph& g, const EdgeSet& es) {
  std::string out;
  for (const auto& l : labels_of(g, es)) out += (out.empty() ? "" : ",") + l;
  return out;
}

bool all_present(const MultiGraph& g, const VertexSet& vs) {
  return std::all_of(vs.begin(), vs.end(), [&](VertexId v) { return g.has_vertex(v); });
}

}  // namespace

// CliquePartition ----------------------------------------------------------

VertexSet CliquePartition::clique_union() const {
  VertexSet out;
  for (const auto& c : cliques) out.insert(c.begin(), c.end());
  return out;
}

std::optional<std::size_t> CliquePartition::clique_of(VertexId v) const {
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    if (cliques[i].contains(v)) return i;
  }
  return std::nullopt;
}

EdgeSet CliquePartition::m(const MultiGraph& g) const { return edges_between(g, v0, clique_union()); }

EdgeSet CliquePartition::m_i(const MultiGraph& g, std::size_t i) const {
  return edges_between(g, cliques.at(i), v0);
}

HypothesisReport CliquePartition::check(const MultiGraph& g) const {
  HypothesisReport report;

  std::size_t total = v0.size();
  VertexSet seen = v0;
  bool nonempty = true;
  for (const auto& c : cliques) {
    total += c.size();
    seen.insert(c.begin(), c.end());
    nonempty = nonempty && !c.empty();
  }
  bool known = all_present(g, seen);
  bool partition = known && nonempty && total == seen.size() && seen.size() == g.vertex_count();
  report.add("partition", partition, partition ? "" : "V0 and the cliques must partition V into non-empty cliques");
  if (!known) return report;

  std::string not_cliques;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    if (!is_clique(g, cliques[i])) not_cliques += (not_cliques.empty() ? "V" : ", V") + std::to_string(i + 1);
  }
  report.add("cliques", not_cliques.empty(), not_cliques.empty() ? "" : not_cliques + " not complete and simple");

  EdgeSet cross;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    for (std::size_t j = i + 1; j < cliques.size(); ++j) {
      auto between = edges_between(g, cliques[i], cliques[j]);
      cross.insert(between.begin(), between.end());
    }
  }
  report.add("no edges between cliques", cross.empty(), cross.empty() ? "" : "edges " + join_labels(g, cross));

  EdgeSet mm = m(g);
  VertexSet crowded;
  for (VertexId v : clique_union()) {
    if (incident_within(g, v, mm).size() > 1) crowded.insert(v);
  }
  report.add("M is a union of stars centred in V0", crowded.empty(),
             crowded.empty() ? "" : "vertices " + join_names(g, crowded) + " meet several M edges");

  report.add("connected", is_connected(g));
  return report;
}

CliquePartition make_partition(const MultiGraph& g, std::vector<VertexSet> cliques) {
  CliquePartition p;
  VertexSet used;
  for (const auto& c : cliques) used.insert(c.begin(), c.end());
  for (const Vertex& v : g.vertices()) {
    if (!used.contains(v.id)) p.v0.insert(v.id);
  }
  p.cliques = std::move(cliques);
  return p;
}

// CliqueCut ----------------------------------------------------------------

EdgeSet CliqueCut::w1(const MultiGraph& g) const { return set_intersection(w, inner_edges(g, set_union(u, s1))); }

EdgeSet CliqueCut::w2(const MultiGraph& g) const { return set_intersection(w, inner_edges(g, set_union(u, s2))); }

HypothesisReport CliqueCut::check(const MultiGraph& g) const {
  HypothesisReport report;
  bool known = all_present(g, u) && all_present(g, s1) && all_present(g, s2) &&
               std::all_of(w.begin(), w.end(), [&](EdgeId e) { return g.has_edge(e); });
  report.add("known vertices and edges", known);
  if (!known) return report;

  report.add("U is a clique", !u.empty() && is_clique(g, u));

  bool partition = set_intersection(s1, s2).empty() && set_intersection(u, set_union(s1, s2)).empty() &&
                   u.size() + s1.size() + s2.size() == g.vertex_count();
  report.add("S1, S2 partition V - U", partition);

  VertexSet common = set_intersection(closed_neighborhood(g, s1), closed_neighborhood(g, s2));
  report.add("N[S1] and N[S2] disjoint", common.empty(),
             common.empty() ? "" : "shared " + join_names(g, common));

  EdgeSet inside = set_intersection(w, inner_edges(g, u));
  report.add("W avoids E(G[U])", inside.empty(), inside.empty() ? "" : "edges " + join_labels(g, inside));

  report.add("connected", is_connected(g));
  return report;
}

// Operators ----------------------------------------------------------------

StarResult star_graph(const MultiGraph& g, const EdgeSet& w) {
  if (w.empty()) throw Error(ErrorKind::EmptyEdgeSet, "W must be non-empty");
  StarResult out;
  out.components = edge_components(g, w);
  GraphBuilder builder(g);
  for (std::size_t i = 0; i < out.components.size(); ++i) {
    VertexId center = builder.add_vertex("w" + std::to_string(i + 1));
    out.centers.push_back(center);
    VertexSet ends = endpoints(g, out.components[i]);
    for (const Vertex& v : g.vertices()) {
      if (!ends.contains(v.id)) continue;
      out.new_edges.insert(builder.add_edge(center, v.id, builder.vertex(center).name + "-" + v.name));
    }
  }
  out.graph = builder.finish();
  return out;
}

Contraction bullet_contract(const MultiGraph& g, const VertexSet& u) { return contract_edges(g, inner_edges(g, u)); }

Contraction bullet_contract_parts(const MultiGraph& g, const std::vector<VertexSet>& parts) {
  std::map<VertexId, VertexId> onto;
  for (const VertexSet& part : parts) {
    for (VertexId v : part) {
      if (!g.has_vertex(v)) throw Error(ErrorKind::UnknownVertex, "#" + std::to_string(v.value));
      onto.emplace(v, *part.begin());
    }
  }
  Contraction out;
  GraphBuilder builder;
  for (const Vertex& v : g.vertices()) {
    VertexId image = onto.contains(v.id) ? onto.at(v.id) : v.id;
    if (image == v.id) builder.add_vertex_with_id(v.id, v.name);
    out.map.vertex_map.emplace(v.id, image);
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

std::vector<VertexId> clique_images(const Contraction& c, const CliquePartition& p) {
  std::vector<VertexId> out;
  for (const auto& clique : p.cliques) out.push_back(c.map(*clique.begin()));
  return out;
}

SplitResult vertex_split(const MultiGraph& g, VertexId v, const EdgeSet& kept) {
  if (!g.has_vertex(v)) throw Error(ErrorKind::UnknownVertex, "#" + std::to_string(v.value));
  for (EdgeId e : kept) {
    if (!g.has_edge(e)) throw Error(ErrorKind::UnknownEdge, "#" + std::to_string(e.value));
    if (!g.edge(e).touches(v)) throw Error(ErrorKind::UnknownEdge, g.edge(e).label + " is not at " + g.vertex(v).name);
  }
  GraphBuilder builder(g);
  SplitResult out;
  out.new_vertex = builder.add_vertex(g.vertex(v).name + "'");
  for (EdgeId e : g.incident_edges(v)) {
    if (!kept.contains(e)) builder.move_endpoint(e, v, out.new_vertex);
  }
  out.new_edge = builder.add_edge(v, out.new_vertex, g.vertex(v).name + "~" + builder.vertex(out.new_vertex).name);
  out.graph = builder.finish();
  return out;
}

DiamondSubgraphResult diamond_subgraph(const MultiGraph& g, const VertexSet& vs, const EdgeSet& es) {
  for (VertexId v : vs) {
    if (!g.has_vertex(v)) throw Error(ErrorKind::NotASubgraph, "unknown vertex #" + std::to_string(v.value));
  }
  for (EdgeId e : es) {
    if (!g.has_edge(e)) throw Error(ErrorKind::NotASubgraph, "unknown edge #" + std::to_string(e.value));
    if (!vs.contains(g.edge(e).a) || !vs.contains(g.edge(e).b)) {
      throw Error(ErrorKind::NotASubgraph, "edge " + g.edge(e).label + " leaves the vertex set");
    }
  }
  DiamondSubgraphResult out{g, {}};
  for (const Vertex& v : g.vertices()) {
    if (!vs.contains(v.id)) continue;
    EdgeSet kept = incident_within(g, v.id, es);
    if (kept.size() == g.degree(v.id)) continue;
    SplitResult s = vertex_split(out.graph, v.id, kept);
    out.graph = std::move(s.graph);
    out.new_edges.insert(s.new_edge);
  }
  return out;
}

DiamondPartition diamond_partition(const MultiGraph& g, const std::vector<EdgeSet>& parts) {
  std::map<EdgeId, std::size_t> part_of;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].empty()) throw Error(ErrorKind::NotAPartition, "part " + std::to_string(j + 1) + " is empty");
    for (EdgeId e : parts[j]) {
      if (!g.has_edge(e)) throw Error(ErrorKind::NotAPartition, "unknown edge #" + std::to_string(e.value));
      if (!part_of.emplace(e, j).second) {
        throw Error(ErrorKind::NotAPartition, "edge " + g.edge(e).label + " lies in two parts");
      }
    }
  }
  if (part_of.size() != g.edge_count()) throw Error(ErrorKind::NotAPartition, "parts do not cover every edge");

  DiamondPartition out;
  out.copies.resize(parts.size());
  out.part_vertices.resize(parts.size());

  // Originals first so fresh copies never take an original id.
  GraphBuilder builder;
  std::vector<std::set<std::size_t>> touched(g.vertex_count());
  for (const Vertex& v : g.vertices()) {
    builder.add_vertex_with_id(v.id, v.name);
    for (EdgeId e : g.incident_edges(v.id)) touched[g.index_of(v.id)].insert(part_of.at(e));
  }
  for (const Vertex& v : g.vertices()) {
    bool first = true;
    for (std::size_t j : touched[g.index_of(v.id)]) {
      VertexId copy = first ? v.id : builder.add_vertex(v.name + "#" + std::to_string(j + 1));
      first = false;
      out.copies[j].emplace(v.id, copy);
      out.part_vertices[j].insert(copy);
    }
  }
  for (const Edge& e : g.edges()) {
    const auto& copy = out.copies[part_of.at(e.id)];
    builder.add_edge_with_id(e.id, copy.at(e.a), copy.at(e.b), e.label);
  }
  for (const Vertex& v : g.vertices()) {
    std::vector<std::size_t> touched;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (out.copies[j].contains(v.id)) touched.push_back(j);
    }
    if (touched.size() < 2) continue;
    VertexId center = builder.add_vertex("w_" + v.name);
    out.centers.emplace(v.id, center);
    for (std::size_t j : touched) {
      VertexId copy = out.copies[j].at(v.id);
      out.new_edges.insert(builder.add_edge(center, copy, "m_" + v.name + "_" + std::to_string(j + 1)));
    }
  }
  out.graph = builder.finish();

  Contraction q = contract_edges(out.graph, g.edge_set());
  out.quotient = std::move(q.graph);
  for (std::size_t j = 0; j < parts.size(); ++j) out.part_nodes.push_back(q.map(*out.part_vertices[j].begin()));
  return out;
}

EdgeWeighting omega_weighting(const MultiGraph& g, const CliquePartition& p, const EdgeSet& r) {
  EdgeWeighting w;
  for (std::size_t i = 0; i < p.cliques.size(); ++i) {
    Rational size = static_cast<long>(p.cliques[i].size());
    for (EdgeId e : p.m_i(g, i)) w.set(e, r.contains(e) ? size : Rational(size / (size + 1)));
  }
  return w;
}

CircReduced circ_reduce(const MultiGraph& g, const CliquePartition& p, const EdgeSet& r) {
  HypothesisReport report = p.check(g);
  EdgeSet mm = p.m(g);
  EdgeSet stray = set_difference(r, mm);
  report.add("R inside M", stray.empty());
  require(report);

  CircReduced out{bullet_contract_parts(g, p.cliques), {}, {}, omega_weighting(g, p, r)};
  const MultiGraph& bullet = out.bullet.graph;

  // (clique, outer vertex, in R) -> class members in id order
  std::map<std::tuple<std::size_t, VertexId, bool>, std::vector<EdgeId>> classes;
  for (std::size_t i = 0; i < p.cliques.size(); ++i) {
    for (EdgeId e : p.m_i(g, i)) {
      const Edge& edge = g.edge(e);
      VertexId outer = p.v0.contains(edge.a) ? edge.a : edge.b;
      classes[{i, outer, r.contains(e)}].push_back(e);
    }
  }
  EdgeSet removed;
  for (auto& [key, members] : classes) {
    std::sort(members.begin(), members.end());
    const auto& [i, outer, in_r] = key;
    Rational size = static_cast<long>(p.cliques[i].size());
    Rational count = static_cast<long>(members.size());
    out.weights.set(members.front(), in_r ? Rational(size * count) : Rational(size / (size + 1) * count));
    removed.insert(members.begin() + 1, members.end());
  }
  out.graph = delete_edges(bullet, removed);
  return out;
}

LineGraph line_graph(const MultiGraph& h) {
  LineGraph out;
  GraphBuilder builder;
  for (const Edge& e : h.edges()) out.vertex_of.emplace(e.id, builder.add_vertex(e.label));
  for (const Vertex& u : h.vertices()) {
    auto at = h.incident_edges(u.id);
    for (std::size_t i = 0; i < at.size(); ++i) {
      for (std::size_t j = i + 1; j < at.size(); ++j) {
        EdgeId le = builder.add_edge(out.vertex_of.at(at[i]), out.vertex_of.at(at[j]),
                                     h.edge(at[i]).label + "^" + h.edge(at[j]).label + "@" + u.name);
        out.via.emplace(le, u.id);
      }
    }
  }
  out.graph = builder.finish();
  return out;
}

MiddleGraph middle_graph(const MultiGraph& h) {
  LineGraph line = line_graph(h);
  GraphBuilder builder(line.graph);
  MiddleGraph out;
  out.edge_vertex = line.vertex_of;
  out.parts.resize(h.vertex_count());
  for (const auto& [le, u] : line.via) out.parts[h.index_of(u)].insert(le);
  for (const Vertex& u : h.vertices()) {
    VertexId mid = builder.add_vertex(u.name);
    out.original_vertex.emplace(u.id, mid);
    for (EdgeId e : h.incident_edges(u.id)) {
      out.parts[h.index_of(u.id)].insert(
          builder.add_edge(mid, line.vertex_of.at(e), u.name + "|" + h.edge(e).label));
    }
  }
  out.graph = builder.finish();
  return out;
}

Subdivision subdivision(const MultiGraph& h) {
  Subdivision out;
  GraphBuilder builder;
  for (const Vertex& v : h.vertices()) builder.add_vertex_with_id(v.id, v.name);
  for (const Edge& e : h.edges()) {
    VertexId mid = builder.add_vertex("s_" + e.label);
    out.midpoint.emplace(e.id, mid);
    builder.add_edge(e.a, mid, e.label + ".a");
    builder.add_edge(mid, e.b, e.label + ".b");
  }
  out.graph = builder.finish();
  return out;
}

std::vector<EdgeSet> line_graph_cliques(const MultiGraph& h, const LineGraph& l) {
  std::vector<EdgeSet> by_vertex(h.vertex_count());
  for (const auto& [le, u] : l.via) by_vertex[h.index_of(u)].insert(le);
  std::vector<EdgeSet> out;
  for (auto& part : by_vertex) {
    if (!part.empty()) out.push_back(std::move(part));
  }
  return out;
}

Reduction reduce_to_special_case(const MultiGraph& g, const std::vector<VertexSet>& cliques, const EdgeSet& w) {
  CliquePartition p = make_partition(g, cliques);
  HypothesisReport shape = p.check(g);
  for (const auto& c : shape.conditions()) {
    if ((c.name == "partition" || c.name == "cliques") && !c.holds) {
      throw Error(ErrorKind::NotCliquePartition, c.name + (c.detail.empty() ? "" : ": " + c.detail));
    }
  }
  for (EdgeId e : w) {
    if (!g.has_edge(e)) throw Error(ErrorKind::UnknownEdge, "#" + std::to_string(e.value));
  }
  if (!is_forest(g, w)) throw Error(ErrorKind::NotAForest, "G[W] has a cycle");

  // M: every edge whose ends lie in different parts.
  EdgeSet mm;
  for (const Edge& e : g.edges()) {
    if (p.clique_of(e.a) != p.clique_of(e.b)) mm.insert(e.id);
  }
  EdgeSet missing = set_difference(mm, w);
  if (!missing.empty()) throw Error(ErrorKind::MNotContained, "M edges " + join_labels(g, missing) + " not in W");

  StarResult star = star_graph(g, w);
  Reduction out;
  out.graph = delete_edges(star.graph, mm);
  out.w_prime = star.new_edges;
  out.partition.cliques = cliques;
  out.partition.v0 = p.v0;
  out.partition.v0.insert(star.centers.begin(), star.centers.end());
  out.m_prime = out.partition.m(out.graph);
  out.n_prime = set_intersection(out.w_prime, inner_edges(out.graph, out.partition.v0));

  HypothesisReport& cert = out.certificate;
  HypothesisReport structure = out.partition.check(out.graph);
  for (const auto& c : structure.conditions()) cert.add(c.name, c.holds, c.detail);
  bool split = set_union(out.m_prime, out.n_prime) == out.w_prime;
  cert.add("W' = M' + N'", split);
  VertexSet centers(star.centers.begin(), star.centers.end());
  bool centred = true;
  for (const auto& comp : edge_components(out.graph, out.w_prime)) {
    // A star whose center is new: exactly one new vertex, touching every edge.
    VertexSet ends = endpoints(out.graph, comp);
    VertexSet hubs = set_intersection(ends, centers);
    centred = centred && hubs.size() == 1 && comp.size() + 1 == ends.size();
  }
  cert.add("W' components are stars on new centers", centred);
  cert.add("count preserved", count_constrained(g, w) == count_constrained(out.graph, out.w_prime));
  return out;
}

}  // namespace treecount
