#include "treecount/formulas.hpp"

#include <algorithm>
#include <functional>

#include "treecount/kirchhoff.hpp"
#include "treecount/union_find.hpp"

namespace treecount {

namespace {

Rational q(std::size_t x) { return Rational(static_cast<long>(x)); }

Rational pow_q(std::size_t base, long exponent) { return power(q(base), exponent); }

long as_long(std::size_t x) { return static_cast<long>(x); }

FormulaResult finish(Rational value, HypothesisReport report) {
  FormulaResult out;
  value.canonicalize();
  out.value = std::move(value);
  if (is_integral(out.value)) out.count = to_count(out.value);
  out.report = std::move(report);
  return out;
}

Rational sum_over_trees(const MultiGraph& g, const EdgeSet& required, const EvalOptions& opts,
                        const std::function<Rational(const EdgeSet&)>& term) {
  Rational sum = 0;
  for_each_spanning_tree(g, required, [&](const EdgeSet& t) { sum += term(t); }, opts.cap);
  return sum;
}

Rational weighted_sum(const MultiGraph& g, const EdgeWeighting& w, const EdgeSet& required, const EvalOptions& opts) {
  if (opts.route == Route::enumeration) return tree_sum_by_enumeration(g, w, required, opts.cap);
  return weighted_tree_sum_constrained(g, w, required);
}

Count count_by_route(const MultiGraph& g, const EdgeSet& required, const EvalOptions& opts) {
  if (opts.route == Route::enumeration) {
    Count c = 0;
    for_each_spanning_tree(g, required, [&](const EdgeSet&) { ++c; }, opts.cap);
    return c;
  }
  return count_constrained(g, required);
}

bool edges_known(const MultiGraph& g, const EdgeSet& es) {
  return std::all_of(es.begin(), es.end(), [&](EdgeId e) { return g.has_edge(e); });
}

bool vertices_known(const MultiGraph& g, const VertexSet& vs) {
  return std::all_of(vs.begin(), vs.end(), [&](VertexId v) { return g.has_vertex(v); });
}

bool is_matching(const MultiGraph& g, const EdgeSet& es) {
  VertexSet seen;
  for (EdgeId e : es) {
    if (!seen.insert(g.edge(e).a).second || !seen.insert(g.edge(e).b).second) return false;
  }
  return true;
}

std::size_t min_degree(const MultiGraph& g) {
  std::size_t d = SIZE_MAX;
  for (const Vertex& v : g.vertices()) d = std::min(d, g.degree(v.id));
  return d;
}

void add_partition_conditions(HypothesisReport& report, const MultiGraph& g, const CliquePartition& p,
                              const EdgeSet& n) {
  report.append(p.check(g));
  bool known = edges_known(g, n);
  report.add("N inside E(G[V0])", known && vertices_known(g, p.v0) &&
                                       set_difference(n, inner_edges(g, p.v0)).empty());
}

// Shared core for clique partitions: prefactor and G.U tree sum with weight
// |V_i| on each M_i edge.
Rational clique_tree_sum(const MultiGraph& g, const CliquePartition& p, const EdgeSet& n, const EvalOptions& opts) {
  Contraction bullet = bullet_contract_parts(g, p.cliques);
  Rational prefactor = 1;
  EdgeWeighting w;
  for (std::size_t i = 0; i < p.cliques.size(); ++i) {
    std::size_t size = p.cliques[i].size();
    EdgeSet mi = p.m_i(g, i);
    prefactor *= pow_q(size, as_long(size) - 2 - as_long(mi.size()));
    for (EdgeId e : mi) w.set(e, q(size));
  }
  if (opts.route == Route::matrix_tree) return prefactor * weighted_tree_sum_constrained(bullet.graph, w, n);

  std::vector<VertexId> images = clique_images(bullet, p);
  Rational sum = sum_over_trees(bullet.graph, n, opts, [&](const EdgeSet& t) {
    Rational term = 1;
    for (std::size_t i = 0; i < images.size(); ++i) {
      term *= pow_q(p.cliques[i].size(), as_long(incidence(bullet.graph, t, images[i])));
    }
    return term;
  });
  return prefactor * sum;
}

// Prefactor of the clique-weighted form: prod |V_i|^(|V_i|-2-|M_i|) (1+|V_i|)^|M_i - R|.
Rational omega_prefactor(const MultiGraph& g, const CliquePartition& p, const EdgeSet& r) {
  Rational prefactor = 1;
  for (std::size_t i = 0; i < p.cliques.size(); ++i) {
    std::size_t size = p.cliques[i].size();
    EdgeSet mi = p.m_i(g, i);
    prefactor *= pow_q(size, as_long(size) - 2 - as_long(mi.size()));
    prefactor *= pow_q(size + 1, as_long(set_difference(mi, r).size()));
  }
  return prefactor;
}

HypothesisReport thm53_conditions(const MultiGraph& g, const CliquePartition& p, const EdgeSet& r, const EdgeSet& n) {
  HypothesisReport report;
  add_partition_conditions(report, g, p, n);
  bool inside = edges_known(g, r) && vertices_known(g, p.clique_union()) && set_difference(r, p.m(g)).empty();
  report.add("R inside M", inside);
  return report;
}

HypothesisReport clique_edge_partition_conditions(const MultiGraph& g, const std::vector<EdgeSet>& parts) {
  HypothesisReport report;
  std::size_t total = 0;
  EdgeSet all;
  bool nonempty = true;
  for (const auto& part : parts) {
    total += part.size();
    all.insert(part.begin(), part.end());
    nonempty = nonempty && !part.empty();
  }
  bool partition = nonempty && edges_known(g, all) && total == all.size() && all.size() == g.edge_count();
  report.add("parts partition E(G)", partition);
  if (!edges_known(g, all)) return report;
  std::string bad;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    VertexSet ends = endpoints(g, parts[j]);
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (EdgeId e : parts[j]) {
      auto [a, b] = std::minmax(g.edge(e).a, g.edge(e).b);
      pairs.emplace(a, b);
    }
    std::size_t k = ends.size();
    bool complete = pairs.size() == parts[j].size() && pairs.size() == k * (k - 1) / 2;
    if (!complete) bad += (bad.empty() ? "E" : ", E") + std::to_string(j + 1);
  }
  report.add("each part is a complete graph", bad.empty(), bad.empty() ? "" : bad + " not complete and simple");
  return report;
}

}  // namespace

// Closed forms -------------------------------------------------------------

FormulaResult moon_count(std::size_t n, const EdgeSet& m) {
  MultiGraph kn = complete_graph(n);
  HypothesisReport report;
  report.add("n >= 1", n >= 1);
  report.add("M inside E(K_n)", edges_known(kn, m));
  require(report);
  if (!is_forest(kn, m)) return finish(0, report);

  UnionFind uf(n);
  for (EdgeId e : m) uf.unite(kn.index_of(kn.edge(e).a), kn.index_of(kn.edge(e).b));
  Rational value = pow_q(n, as_long(uf.set_count()) - 2);
  for (std::size_t v = 0; v < n; ++v) {
    if (uf.find(v) == v) value *= q(uf.set_size(v));
  }
  return finish(value, report);
}

FormulaResult thm12_matching(const MultiGraph& g, const std::vector<VertexSet>& cliques, const EvalOptions& opts) {
  CliquePartition p = make_partition(g, cliques);
  HypothesisReport report;
  report.add("V0 empty", p.v0.empty());
  HypothesisReport shape = p.check(g);
  for (const auto& c : shape.conditions()) {
    if (c.name == "partition" || c.name == "cliques" || c.name == "connected") report.add(c.name, c.holds, c.detail);
  }
  require(report);

  EdgeSet inner;
  for (const auto& c : cliques) {
    EdgeSet e = inner_edges(g, c);
    inner.insert(e.begin(), e.end());
  }
  EdgeSet m0 = set_difference(g.edge_set(), inner);
  report.add("M0 is a matching", is_matching(g, m0));
  require(report);

  Contraction star = contract_edges(g, inner);
  std::map<EdgeId, Rational> cost;
  for (EdgeId e : m0) {
    std::size_t a = cliques[*p.clique_of(g.edge(e).a)].size();
    std::size_t b = cliques[*p.clique_of(g.edge(e).b)].size();
    cost[e] = Rational(1, as_long(a)) + Rational(1, as_long(b));
  }
  Rational prefactor = 1;
  for (const auto& c : cliques) prefactor *= pow_q(c.size(), as_long(c.size()) - 2);

  Rational sum;
  if (opts.route == Route::enumeration) {
    sum = sum_over_trees(star.graph, {}, opts, [&](const EdgeSet& t) {
      Rational term = 1;
      for (const auto& [e, c] : cost) {
        if (!t.contains(e)) term *= c;
      }
      return term;
    });
  } else {
    // sum_T prod_{e not in T} c(e) = prod_e c(e) * sum_T prod_{e in T} 1/c(e)
    EdgeWeighting w;
    Rational all = 1;
    for (const auto& [e, c] : cost) {
      all *= c;
      w.set(e, 1 / c);
    }
    sum = all * weighted_tree_sum(star.graph, w);
  }
  return finish(prefactor * sum, report);
}

FormulaResult line_graph_formula(const MultiGraph& h, const EvalOptions& opts) {
  HypothesisReport report;
  report.add("connected", is_connected(h));
  report.add("has an edge", h.edge_count() > 0);
  require(report);

  Rational prefactor = 1;
  for (const Vertex& v : h.vertices()) prefactor *= pow_q(h.degree(v.id), as_long(h.degree(v.id)) - 2);
  std::map<EdgeId, Rational> cost;
  for (const Edge& e : h.edges()) {
    cost[e.id] = Rational(1, as_long(h.degree(e.a))) + Rational(1, as_long(h.degree(e.b)));
  }
  Rational sum;
  if (opts.route == Route::enumeration) {
    sum = sum_over_trees(h, {}, opts, [&](const EdgeSet& t) {
      Rational term = 1;
      for (const auto& [e, c] : cost) {
        if (!t.contains(e)) term *= c;
      }
      return term;
    });
  } else {
    EdgeWeighting w;
    Rational all = 1;
    for (const auto& [e, c] : cost) {
      all *= c;
      w.set(e, 1 / c);
    }
    sum = all * weighted_tree_sum(h, w);
  }
  return finish(prefactor * sum, report);
}

FormulaResult regular_line_graph(const MultiGraph& h, const EvalOptions& opts) {
  HypothesisReport report;
  report.add("connected", is_connected(h));
  report.add("has an edge", h.edge_count() > 0);
  std::size_t r = h.vertex_count() ? h.degree(h.vertices()[0].id) : 0;
  report.add("regular", is_regular(h, r), "degree " + std::to_string(r));
  require(report);

  long m = as_long(h.edge_count());
  long n = as_long(h.vertex_count());
  Count tau = count_by_route(h, {}, opts);
  Rational value = pow_q(2, m - n + 1) * pow_q(r, m - n - 1) * Rational(tau);
  FormulaResult out = finish(value, report);
  out.details["tau_H"] = to_string(tau);
  return out;
}

// Clique contractions ------------------------------------------------------

FormulaResult prop31_count(const MultiGraph& g, const VertexSet& u) {
  HypothesisReport report;
  bool known = vertices_known(g, u);
  report.add("U is a clique", known && !u.empty() && is_clique(g, u));
  report.add("connected", is_connected(g));
  require(report);
  EdgeSet w = set_difference(g.edge_set(), inner_edges(g, u));
  report.add("G[W] is a forest", is_forest(g, w));
  require(report);

  auto parts = edge_components(g, w);
  long exponent = as_long(u.size()) - 2 + as_long(parts.size());
  Rational product = 1;
  for (const auto& part : parts) {
    std::size_t ni = set_intersection(endpoints(g, part), u).size();
    exponent -= as_long(ni);
    product *= q(ni);
  }
  FormulaResult out = finish(pow_q(u.size(), exponent) * product, report);
  out.details["components"] = std::to_string(parts.size());
  return out;
}

FormulaResult thm31_count(const MultiGraph& g, const VertexSet& u, const EdgeSet& n, const EvalOptions& opts) {
  HypothesisReport report;
  bool known = vertices_known(g, u) && edges_known(g, n);
  report.add("known vertices and edges", known);
  require(report);
  CliquePartition p = make_partition(g, {u});
  report.add("U is a clique", !u.empty() && is_clique(g, u));
  EdgeSet m = boundary(g, u);
  VertexSet crowded;
  for (VertexId v : u) {
    if (incident_within(g, v, m).size() > 1) crowded.insert(v);
  }
  report.add("E(U) is a union of stars centred outside U", crowded.empty());
  report.add("N inside E(G - U)", set_difference(n, inner_edges(g, p.v0)).empty());
  report.add("connected", is_connected(g));
  require(report);
  return finish(clique_tree_sum(g, p, n, opts), report);
}

FormulaResult thm42_count(const MultiGraph& g, const CliquePartition& p, const EdgeSet& n, const EvalOptions& opts) {
  HypothesisReport report;
  add_partition_conditions(report, g, p, n);
  require(report);
  return finish(clique_tree_sum(g, p, n, opts), report);
}

FormulaResult thm53_count(const MultiGraph& g, const CliquePartition& p, const EdgeSet& r, const EdgeSet& n,
                          const EvalOptions& opts) {
  HypothesisReport report = thm53_conditions(g, p, r, n);
  require(report);
  Contraction bullet = bullet_contract_parts(g, p.cliques);

  if (opts.route == Route::matrix_tree) {
    Rational sum = weighted_tree_sum_constrained(bullet.graph, omega_weighting(g, p, r), n);
    return finish(omega_prefactor(g, p, r) * sum, report);
  }

  Rational prefactor = 1;
  std::vector<EdgeSet> mi;
  for (std::size_t i = 0; i < p.cliques.size(); ++i) {
    prefactor *= pow_q(p.cliques[i].size(), as_long(p.cliques[i].size()) - 2);
    mi.push_back(p.m_i(g, i));
  }
  Rational sum = sum_over_trees(bullet.graph, n, opts, [&](const EdgeSet& t) {
    Rational term = 1;
    for (std::size_t i = 0; i < mi.size(); ++i) {
      EdgeSet missing = set_difference(mi[i], t);
      long free = as_long(set_difference(missing, r).size());
      term *= pow_q(p.cliques[i].size(), -as_long(missing.size())) * pow_q(p.cliques[i].size() + 1, free);
    }
    return term;
  });
  return finish(prefactor * sum, report);
}

FormulaResult thm53_reduced(const MultiGraph& g, const CliquePartition& p, const EdgeSet& r, const EdgeSet& n,
                            const EvalOptions& opts) {
  HypothesisReport report = thm53_conditions(g, p, r, n);
  require(report);
  CircReduced reduced = circ_reduce(g, p, r);
  Rational sum = weighted_sum(reduced.graph, reduced.weights, n, opts);
  FormulaResult out = finish(omega_prefactor(g, p, r) * sum, report);
  out.details["removed_parallel"] = std::to_string(reduced.bullet.graph.edge_count() - reduced.graph.edge_count());
  return out;
}

FormulaResult cor531_count(const MultiGraph& g, const CliquePartition& p, const EdgeSet& n, const EvalOptions& opts) {
  HypothesisReport report;
  add_partition_conditions(report, g, p, n);
  require(report);
  Contraction bullet = bullet_contract_parts(g, p.cliques);

  Rational prefactor = 1;
  std::vector<EdgeSet> mi;
  for (std::size_t i = 0; i < p.cliques.size(); ++i) {
    prefactor *= pow_q(p.cliques[i].size(), as_long(p.cliques[i].size()) - 2);
    mi.push_back(p.m_i(g, i));
  }
  if (opts.route == Route::matrix_tree) {
    // (1 + 1/s)^|M_i - T| = (1 + 1/s)^|M_i| * (s/(1+s))^|M_i & T|
    EdgeWeighting w;
    for (std::size_t i = 0; i < mi.size(); ++i) {
      Rational s = q(p.cliques[i].size());
      prefactor *= power(1 + 1 / s, as_long(mi[i].size()));
      for (EdgeId e : mi[i]) w.set(e, s / (s + 1));
    }
    return finish(prefactor * weighted_tree_sum_constrained(bullet.graph, w, n), report);
  }
  Rational sum = sum_over_trees(bullet.graph, n, opts, [&](const EdgeSet& t) {
    Rational term = 1;
    for (std::size_t i = 0; i < mi.size(); ++i) {
      Rational s = q(p.cliques[i].size());
      term *= power(1 + 1 / s, as_long(set_difference(mi[i], t).size()));
    }
    return term;
  });
  return finish(prefactor * sum, report);
}

// Edge partitions into cliques ---------------------------------------------

FormulaResult thm54_count(const MultiGraph& g, const std::vector<EdgeSet>& parts, const EvalOptions& opts) {
  HypothesisReport report = clique_edge_partition_conditions(g, parts);
  require(report);

  DiamondPartition d = diamond_partition(g, parts);
  Rational prefactor = 1;
  std::vector<std::size_t> order(parts.size());
  for (std::size_t j = 0; j < parts.size(); ++j) {
    VertexSet vs = endpoints(g, parts[j]);
    std::size_t shared = 0;
    for (VertexId v : vs) {
      if (incident_within(g, v, parts[j]).size() != g.degree(v)) ++shared;
    }
    order[j] = vs.size();
    prefactor *= pow_q(vs.size(), as_long(vs.size()) - 2 - as_long(shared));
  }

  Rational sum;
  if (opts.route == Route::matrix_tree) {
    EdgeWeighting w;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      for (EdgeId e : d.quotient.incident_edges(d.part_nodes[j])) w.set(e, q(order[j]));
    }
    sum = weighted_tree_sum(d.quotient, w);
  } else {
    sum = sum_over_trees(d.quotient, {}, opts, [&](const EdgeSet& t) {
      Rational term = 1;
      for (std::size_t j = 0; j < parts.size(); ++j) {
        term *= pow_q(order[j], as_long(incidence(d.quotient, t, d.part_nodes[j])));
      }
      return term;
    });
  }
  FormulaResult out = finish(prefactor * sum, report);
  out.details["quotient_vertices"] = std::to_string(d.quotient.vertex_count());
  return out;
}

FormulaResult middle_graph_count(const MultiGraph& h, const EvalOptions& opts) {
  HypothesisReport report;
  report.add("connected", is_connected(h));
  require(report);

  Subdivision s = subdivision(h);
  if (opts.route == Route::matrix_tree) {
    Rational prefactor = 1;
    EdgeWeighting w;
    for (const Vertex& u : h.vertices()) {
      std::size_t d = h.degree(u.id);
      prefactor /= q(d + 1);
      for (EdgeId e : s.graph.incident_edges(u.id)) w.set(e, q(d + 1));
    }
    return finish(prefactor * weighted_tree_sum(s.graph, w), report);
  }
  Rational sum = sum_over_trees(s.graph, {}, opts, [&](const EdgeSet& t) {
    Rational term = 1;
    for (const Vertex& u : h.vertices()) {
      term *= pow_q(h.degree(u.id) + 1, as_long(incidence(s.graph, t, u.id)) - 1);
    }
    return term;
  });
  return finish(sum, report);
}

FormulaResult line_graph_via_subdivision(const MultiGraph& h, const EvalOptions& opts) {
  HypothesisReport report;
  report.add("connected", is_connected(h));
  report.add("has an edge", h.edge_count() > 0);
  require(report);

  const bool printed = opts.mode == LsubMode::printed;
  if (!printed && min_degree(h) < 2) {
    LineGraph l = line_graph(h);
    FormulaResult out = thm54_count(l.graph, line_graph_cliques(h, l), opts);
    out.report = report;
    out.details["route"] = "clique partition of L(H)";
    return out;
  }

  Subdivision s = subdivision(h);
  Rational prefactor = 1;
  if (!printed) {
    for (const Vertex& u : h.vertices()) prefactor *= pow_q(h.degree(u.id), -2);
  }
  Rational sum;
  if (opts.route == Route::matrix_tree) {
    EdgeWeighting w;
    for (const Vertex& u : h.vertices()) {
      for (EdgeId e : s.graph.incident_edges(u.id)) w.set(e, q(h.degree(u.id)));
    }
    sum = weighted_tree_sum(s.graph, w);
  } else {
    sum = sum_over_trees(s.graph, {}, opts, [&](const EdgeSet& t) {
      Rational term = 1;
      for (const Vertex& u : h.vertices()) term *= pow_q(h.degree(u.id), as_long(incidence(s.graph, t, u.id)));
      return term;
    });
  }
  return finish(prefactor * sum, report);
}

// Clique cuts --------------------------------------------------------------

FormulaResult thm510_factorize(const MultiGraph& g, const CliqueCut& cut, const EvalOptions& opts) {
  HypothesisReport report = cut.check(g);
  require(report);
  MultiGraph g1 = induced_subgraph(g, set_union(cut.u, cut.s1));
  MultiGraph g2 = induced_subgraph(g, set_union(cut.u, cut.s2));
  Count part1 = count_by_route(g1, cut.w1(g), opts);
  Count part2 = count_by_route(g2, cut.w2(g), opts);
  Count direct = count_by_route(g, cut.w, opts);
  Rational value = Rational(part1 * part2) / pow_q(cut.u.size(), as_long(cut.u.size()) - 2);
  FormulaResult out = finish(value, report);
  out.details["direct"] = to_string(direct);
  out.details["side1"] = to_string(part1);
  out.details["side2"] = to_string(part2);
  return out;
}

FormulaResult cor51_pendant_clique(const MultiGraph& g, const VertexSet& u, VertexId w, const EvalOptions& opts) {
  HypothesisReport report;
  bool known = vertices_known(g, u) && g.has_vertex(w);
  report.add("known vertices", known);
  require(report);
  report.add("U is a clique", !u.empty() && is_clique(g, u));
  report.add("w outside U", !u.contains(w));
  VertexSet rest = set_difference(g.vertex_set(), set_union(u, {w}));
  VertexSet common = set_intersection(closed_neighborhood(g, {w}), closed_neighborhood(g, rest));
  report.add("N[w] and N[V - U - w] disjoint", common.empty());
  VertexSet nbrs = neighborhood(g, {w});
  report.add("no parallel edges at w", nbrs.size() == g.degree(w));
  report.add("connected", is_connected(g));
  require(report);

  std::size_t d = g.degree(w);
  Count rest_count = count_by_route(delete_vertices(g, {w}), {}, opts);
  Rational s = q(u.size());
  Rational value = Rational(rest_count) * q(d) * power(1 + 1 / s, as_long(d) - 1);
  FormulaResult out = finish(value, report);
  out.details["tau_without_w"] = to_string(rest_count);
  return out;
}

// Dispatch -----------------------------------------------------------------

const std::vector<std::string>& formula_ids() {
  static const std::vector<std::string> ids = {"moon",   "thm12", "cor11", "eq14", "prop31", "thm31",  "thm42",
                                               "thm53",  "cor531", "thm54", "mid",  "lsub",   "thm510", "cor51"};
  return ids;
}

namespace {

CliqueCut cut_of(const FormulaInput& in) { return {in.u, in.s1, in.s2, in.w}; }

// The input graph must be complete; M is carried over to complete_graph(n)
// through vertex positions.
FormulaResult moon_on(const MultiGraph& g, const EdgeSet& m) {
  HypothesisReport report;
  report.add("graph is complete", is_clique(g, g.vertex_set()));
  report.add("M inside E(G)", edges_known(g, m));
  require(report);
  MultiGraph kn = complete_graph(g.vertex_count());
  EdgeSet mapped;
  for (EdgeId e : m) {
    auto [a, b] = std::minmax({g.index_of(g.edge(e).a), g.index_of(g.edge(e).b)});
    for (const Edge& k : kn.edges()) {
      if (kn.index_of(k.a) == a && kn.index_of(k.b) == b) mapped.insert(k.id);
    }
  }
  FormulaResult out = moon_count(g.vertex_count(), mapped);
  report.append(out.report);
  out.report = report;
  return out;
}

VertexId pendant_of(const FormulaInput& in) {
  if (!in.w_vertex) throw Error(ErrorKind::InvalidArgument, "cor51 needs the vertex w");
  return *in.w_vertex;
}

}  // namespace

FormulaResult evaluate_formula(std::string_view id, const FormulaInput& in, const EvalOptions& opts) {
  const MultiGraph& g = in.graph;
  if (id == "moon") return moon_on(g, in.m);
  if (id == "thm12") return thm12_matching(g, in.partition.cliques, opts);
  if (id == "cor11") return line_graph_formula(g, opts);
  if (id == "eq14") return regular_line_graph(g, opts);
  if (id == "prop31") return prop31_count(g, in.u);
  if (id == "thm31") return thm31_count(g, in.u, in.n, opts);
  if (id == "thm42") return thm42_count(g, in.partition, in.n, opts);
  if (id == "thm53") return thm53_count(g, in.partition, in.r, in.n, opts);
  if (id == "cor531") return cor531_count(g, in.partition, in.n, opts);
  if (id == "thm54") return thm54_count(g, in.edge_parts, opts);
  if (id == "mid") return middle_graph_count(g, opts);
  if (id == "lsub") return line_graph_via_subdivision(g, opts);
  if (id == "thm510") return thm510_factorize(g, cut_of(in), opts);
  if (id == "cor51") return cor51_pendant_clique(g, in.u, pendant_of(in), opts);
  throw Error(ErrorKind::UnknownFormula, std::string(id));
}

Count formula_oracle(std::string_view id, const FormulaInput& in) {
  const MultiGraph& g = in.graph;
  if (id == "moon") return count_constrained(g, in.m);
  if (id == "thm12") {
    EdgeSet inner;
    for (const auto& c : in.partition.cliques) {
      EdgeSet e = inner_edges(g, c);
      inner.insert(e.begin(), e.end());
    }
    return count_constrained(g, set_difference(g.edge_set(), inner));
  }
  if (id == "cor11" || id == "eq14" || id == "lsub") return count_spanning_trees(line_graph(g).graph);
  if (id == "mid") return count_spanning_trees(middle_graph(g).graph);
  if (id == "prop31") return count_constrained(g, set_difference(g.edge_set(), inner_edges(g, in.u)));
  if (id == "thm31") return count_constrained(g, set_union(boundary(g, in.u), in.n));
  if (id == "thm42") return count_constrained(g, set_union(in.partition.m(g), in.n));
  if (id == "thm53") return count_constrained(g, set_union(in.r, in.n));
  if (id == "cor531") return count_constrained(g, in.n);
  if (id == "thm54" || id == "cor51") return count_spanning_trees(g);
  if (id == "thm510") return count_constrained(g, in.w);
  throw Error(ErrorKind::UnknownFormula, std::string(id));
}

}  // namespace treecount
