#include "treecount/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "treecount/enumerator.hpp"
#include "treecount/kirchhoff.hpp"
#include "treecount/union_find.hpp"

namespace treecount {

using nlohmann::json;

std::size_t Rng::uniform(std::size_t lo, std::size_t hi) {
  if (hi <= lo) return lo;
  return lo + static_cast<std::size_t>(next() % (hi - lo + 1));
}

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial) {
  // splitmix64 finalizer over the pair
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

// Small helper for building generated graphs by vertex position.
class Draft {
 public:
  std::size_t add(std::string name) {
    ids_.push_back(builder_.add_vertex(std::move(name)));
    return ids_.size() - 1;
  }
  EdgeId link(std::size_t a, std::size_t b) {
    auto key = std::minmax({a, b});
    ++mult_[key];
    return builder_.add_edge(ids_[a], ids_[b]);
  }
  std::size_t multiplicity(std::size_t a, std::size_t b) const {
    auto it = mult_.find(std::minmax({a, b}));
    return it == mult_.end() ? 0 : it->second;
  }
  VertexId id(std::size_t i) const { return ids_[i]; }
  std::size_t size() const { return ids_.size(); }
  MultiGraph finish() const { return builder_.finish(); }

 private:
  GraphBuilder builder_;
  std::vector<VertexId> ids_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> mult_;
};

VertexSet id_set(const Draft& d, const std::vector<std::size_t>& positions) {
  VertexSet out;
  for (std::size_t p : positions) out.insert(d.id(p));
  return out;
}

// Adds up to `count` random edges among `pool` respecting `multmax`.
void sprinkle(Rng& rng, Draft& d, const std::vector<std::size_t>& pool, std::size_t count, std::size_t multmax) {
  if (pool.size() < 2) return;
  for (std::size_t tries = 0; count > 0 && tries < 20 * (count + 1); ++tries) {
    std::size_t a = pool[rng.uniform(0, pool.size() - 1)];
    std::size_t b = pool[rng.uniform(0, pool.size() - 1)];
    if (a == b || d.multiplicity(a, b) >= multmax) continue;
    d.link(a, b);
    --count;
  }
}

// Random tree on `pool` (each vertex attaches to an earlier one).
void random_tree(Rng& rng, Draft& d, const std::vector<std::size_t>& pool) {
  for (std::size_t i = 1; i < pool.size(); ++i) d.link(pool[i], pool[rng.uniform(0, i - 1)]);
}

void complete(Draft& d, const std::vector<std::size_t>& pool) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) d.link(pool[i], pool[j]);
  }
}

}  // namespace

// Generators ---------------------------------------------------------------

MultiGraph gen_connected_multigraph(Rng& rng, std::size_t nmax, std::size_t mmax, std::size_t multmax) {
  std::size_t n = rng.uniform(1, std::max<std::size_t>(nmax, 1));
  std::size_t m = rng.uniform(n - 1, std::max(n - 1, mmax));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> mult;
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t j = rng.uniform(0, i - 1);
    edges.emplace_back(j, i);
    ++mult[{j, i}];
  }
  for (std::size_t tries = 0; n >= 2 && edges.size() < m && tries < 50 * m; ++tries) {
    std::size_t a = rng.uniform(0, n - 1);
    std::size_t b = rng.uniform(0, n - 1);
    if (a == b) continue;
    auto key = std::minmax({a, b});
    if (mult[key] >= std::max<std::size_t>(multmax, 1)) continue;
    ++mult[key];
    edges.emplace_back(key.first, key.second);
  }
  rng.shuffle(edges);
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  std::vector<EdgeSpec> specs;
  for (auto [a, b] : edges) specs.push_back({names[a], names[b], {}});
  return MultiGraph::build(names, specs);
}

MultiGraph gen_connected_multigraph(std::uint64_t seed, std::size_t nmax, std::size_t mmax, std::size_t multmax) {
  Rng rng(seed);
  return gen_connected_multigraph(rng, nmax, mmax, multmax);
}

EdgeSet random_forest(Rng& rng, const MultiGraph& g, const EdgeSet& pool, std::uint64_t num, std::uint64_t den) {
  std::vector<EdgeId> order(pool.begin(), pool.end());
  rng.shuffle(order);
  UnionFind uf(g.vertex_count());
  EdgeSet out;
  for (EdgeId e : order) {
    if (!rng.chance(num, den)) continue;
    if (uf.unite(g.index_of(g.edge(e).a), g.index_of(g.edge(e).b))) out.insert(e);
  }
  return out;
}

PartitionInstance gen_clique_partition_instance(Rng& rng, const PartitionBounds& b) {
  for (;;) {
    Draft d;
    std::size_t k = b.single_clique ? 1 : rng.uniform(1, b.kmax);
    std::size_t v0 = rng.uniform(1, b.v0max);
    std::vector<std::size_t> outer;
    for (std::size_t i = 0; i < v0; ++i) outer.push_back(d.add("a" + std::to_string(i + 1)));
    for (std::size_t i = 1; i < v0; ++i) {
      if (rng.chance(2, 3)) d.link(outer[i], outer[rng.uniform(0, i - 1)]);
    }
    sprinkle(rng, d, outer, rng.uniform(0, b.v0_extra_edges), b.multmax);

    std::vector<std::vector<std::size_t>> cliques(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t size = rng.uniform(b.parallel_classes ? 2 : 1, std::max<std::size_t>(b.clique_max, 2));
      for (std::size_t j = 0; j < size; ++j) {
        cliques[i].push_back(d.add("c" + std::to_string(i + 1) + "_" + std::to_string(j + 1)));
      }
      complete(d, cliques[i]);
    }
    std::vector<std::size_t> favourites;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t favourite = outer[rng.uniform(0, v0 - 1)];
      favourites.push_back(favourite);
      bool attached = false;
      for (std::size_t j = 0; j < cliques[i].size(); ++j) {
        bool force = !attached && j + 1 == cliques[i].size();
        if (b.parallel_classes && j < 2) force = true;
        if (!force && !rng.chance(1, 2)) continue;
        bool same = b.parallel_classes ? (j < 2 || rng.chance(3, 4)) : false;
        std::size_t to = same ? favourite : outer[rng.uniform(0, v0 - 1)];
        d.link(cliques[i][j], to);
        attached = true;
      }
    }
    PartitionInstance out;
    out.graph = d.finish();
    if (!is_connected(out.graph)) continue;
    out.partition.v0 = id_set(d, outer);
    for (const auto& c : cliques) out.partition.cliques.push_back(id_set(d, c));
    out.n = random_forest(rng, out.graph, inner_edges(out.graph, out.partition.v0), 1, 2);
    for (EdgeId e : out.partition.m(out.graph)) {
      if (rng.chance(1, 2)) out.r.insert(e);
    }
    if (b.parallel_classes) {
      // Keep the two forced edges on the same side of R so their class really
      // has two members to collapse.
      for (std::size_t i = 0; i < k; ++i) {
        VertexSet hub = id_set(d, {favourites[i]});
        EdgeSet first = edges_between(out.graph, id_set(d, {cliques[i][0]}), hub);
        EdgeSet second = edges_between(out.graph, id_set(d, {cliques[i][1]}), hub);
        bool in_r = out.r.contains(*first.begin());
        for (EdgeId e : second) {
          if (in_r) {
            out.r.insert(e);
          } else {
            out.r.erase(e);
          }
        }
      }
    }
    return out;
  }
}

CutInstance gen_clique_cut_instance(Rng& rng, const CutBounds& b) {
  for (;;) {
    Draft d;
    // Two-sided instances put vertices of S1 and S2 on both sides of U, so the
    // cut is not just a cut vertex.
    const bool two_sided = !b.pendant && b.umax >= 2 && rng.chance(1, 2);
    std::size_t usize = rng.uniform(two_sided ? 2 : 1, b.umax);
    std::vector<std::size_t> u;
    for (std::size_t i = 0; i < usize; ++i) u.push_back(d.add("u" + std::to_string(i + 1)));
    complete(d, u);

    std::vector<std::size_t> s1;
    std::vector<std::size_t> s2;
    std::vector<std::size_t> side1_u;
    std::vector<std::size_t> side2_u;
    std::optional<std::size_t> pendant;

    if (b.pendant) {
      std::vector<std::size_t> shuffled = u;
      rng.shuffle(shuffled);
      std::size_t reach = rng.uniform(1, usize);
      side1_u.assign(shuffled.begin(), shuffled.begin() + static_cast<long>(reach));
      side2_u.assign(shuffled.begin() + static_cast<long>(reach), shuffled.end());
      pendant = d.add("w");
      s1.push_back(*pendant);
      for (std::size_t x : side1_u) d.link(*pendant, x);
    } else if (two_sided) {
      std::vector<std::size_t> shuffled = u;
      rng.shuffle(shuffled);
      side1_u.push_back(shuffled[0]);
      side2_u.push_back(shuffled[1]);
      for (std::size_t i = 2; i < usize; ++i) {
        if (rng.chance(1, 5)) continue;
        (rng.chance(1, 2) ? side1_u : side2_u).push_back(shuffled[i]);
      }
      std::size_t n1 = rng.uniform(1, b.side_max);
      for (std::size_t i = 0; i < n1; ++i) s1.push_back(d.add("s" + std::to_string(i + 1)));
    } else {
      for (std::size_t x : u) {
        std::size_t side = rng.uniform(0, 2);
        if (side == 1) side1_u.push_back(x);
        if (side == 2) side2_u.push_back(x);
      }
      if (side1_u.empty()) {
        // Move one vertex over so S1 can attach.
        std::size_t pick = u[rng.uniform(0, usize - 1)];
        std::erase(side2_u, pick);
        side1_u.push_back(pick);
      }
      std::size_t n1 = rng.uniform(1, b.side_max);
      for (std::size_t i = 0; i < n1; ++i) s1.push_back(d.add("s" + std::to_string(i + 1)));
    }
    std::size_t n2 = side2_u.empty() ? 0 : rng.uniform(two_sided ? 1 : 0, b.side_max);
    for (std::size_t i = 0; i < n2; ++i) s2.push_back(d.add("t" + std::to_string(i + 1)));

    auto build_side = [&](const std::vector<std::size_t>& side, const std::vector<std::size_t>& anchors) {
      if (side.empty()) return;
      random_tree(rng, d, side);
      sprinkle(rng, d, side, rng.uniform(0, 1), b.multmax);
      std::size_t first = rng.uniform(0, anchors.size() - 1);
      d.link(side[rng.uniform(0, side.size() - 1)], anchors[first]);
      if (anchors.size() >= 2 && rng.chance(3, 4)) {
        // A second anchor closes cycles through U.
        std::size_t second = (first + rng.uniform(1, anchors.size() - 1)) % anchors.size();
        std::size_t s = side[rng.uniform(0, side.size() - 1)];
        if (d.multiplicity(s, anchors[second]) < b.multmax) d.link(s, anchors[second]);
      }
      for (std::size_t s : side) {
        if (rng.chance(1, 3)) {
          std::size_t a = anchors[rng.uniform(0, anchors.size() - 1)];
          if (d.multiplicity(s, a) < b.multmax) d.link(s, a);
        }
      }
    };
    if (!b.pendant) build_side(s1, side1_u);
    build_side(s2, side2_u);

    CutInstance out;
    out.graph = d.finish();
    if (!is_connected(out.graph) || out.graph.edge_count() > b.edge_cap) continue;
    out.cut.u = id_set(d, u);
    out.cut.s1 = id_set(d, s1);
    out.cut.s2 = id_set(d, s2);
    if (pendant) out.w = d.id(*pendant);
    if (b.with_w && !b.pendant) {
      EdgeSet pool = set_difference(out.graph.edge_set(), inner_edges(out.graph, out.cut.u));
      for (EdgeId e : pool) {
        if (rng.chance(1, 4)) out.cut.w.insert(e);
      }
    }
    return out;
  }
}

EdgePartitionInstance gen_edge_clique_partition_instance(Rng& rng, std::size_t kmax, std::size_t clique_max) {
  Draft d;
  std::vector<std::vector<std::size_t>> cliques;
  std::size_t k = rng.uniform(1, kmax);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t size = rng.uniform(2, std::max<std::size_t>(clique_max, 2));
    std::vector<std::size_t> members;
    if (i > 0) {
      std::vector<std::size_t> existing(d.size());
      for (std::size_t v = 0; v < d.size(); ++v) existing[v] = v;
      rng.shuffle(existing);
      std::size_t reuse = rng.uniform(1, std::min(size, existing.size()));
      members.assign(existing.begin(), existing.begin() + static_cast<long>(reuse));
    }
    while (members.size() < size) members.push_back(d.add(std::to_string(d.size() + 1)));
    cliques.push_back(members);
  }
  EdgePartitionInstance out;
  std::vector<std::vector<EdgeId>> parts(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& c = cliques[i];
    for (std::size_t x = 0; x < c.size(); ++x) {
      for (std::size_t y = x + 1; y < c.size(); ++y) parts[i].push_back(d.link(c[x], c[y]));
    }
  }
  out.graph = d.finish();
  for (const auto& p : parts) out.parts.emplace_back(p.begin(), p.end());
  return out;
}

MultiGraph gen_line_graph_source(Rng& rng, std::size_t nmax, std::size_t mmax, std::size_t multmax) {
  for (;;) {
    MultiGraph h = gen_connected_multigraph(rng, nmax, mmax, multmax);
    if (h.edge_count() > 0) return h;
  }
}

MultiGraph gen_regular_multigraph(Rng& rng, std::size_t n, std::size_t r) {
  if (n < 2 || r == 0 || (n * r) % 2 != 0) throw Error(ErrorKind::InvalidArgument, "no connected r-regular multigraph");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  for (std::size_t attempt = 0; attempt < 10000; ++attempt) {
    std::vector<std::size_t> stubs;
    for (std::size_t v = 0; v < n; ++v) stubs.insert(stubs.end(), r, v);
    rng.shuffle(stubs);
    std::vector<EdgeSpec> edges;
    bool loop = false;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      if (stubs[i] == stubs[i + 1]) {
        loop = true;
        break;
      }
      edges.push_back({names[stubs[i]], names[stubs[i + 1]], {}});
    }
    if (loop) continue;
    MultiGraph g = MultiGraph::build(names, edges);
    if (is_connected(g)) return g;
  }
  throw Error(ErrorKind::InvalidArgument, "configuration model did not produce a connected loopless graph");
}

MatchingInstance gen_matching_instance(Rng& rng, std::size_t kmax, std::size_t clique_max) {
  std::size_t k = rng.uniform(1, kmax);
  std::vector<std::pair<std::size_t, std::size_t>> links;
  for (std::size_t i = 1; i < k; ++i) links.emplace_back(rng.uniform(0, i - 1), i);
  if (k >= 2) {
    std::size_t extra = rng.uniform(0, 2);
    for (std::size_t e = 0; e < extra; ++e) {
      std::size_t a = rng.uniform(0, k - 1);
      std::size_t b = rng.uniform(0, k - 1);
      if (a != b) links.emplace_back(a, b);
    }
  }
  std::vector<std::size_t> degree(k, 0);
  for (auto [a, b] : links) {
    ++degree[a];
    ++degree[b];
  }
  Draft d;
  std::vector<std::vector<std::size_t>> cliques(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t size = std::max(rng.uniform(1, clique_max), degree[i]);
    for (std::size_t j = 0; j < size; ++j) {
      cliques[i].push_back(d.add("c" + std::to_string(i + 1) + "_" + std::to_string(j + 1)));
    }
    complete(d, cliques[i]);
  }
  std::vector<std::vector<std::size_t>> free = cliques;
  for (auto& f : free) rng.shuffle(f);
  for (auto [a, b] : links) {
    std::size_t x = free[a].back();
    free[a].pop_back();
    std::size_t y = free[b].back();
    free[b].pop_back();
    d.link(x, y);
  }
  MatchingInstance out;
  out.graph = d.finish();
  for (const auto& c : cliques) out.cliques.push_back(id_set(d, c));
  return out;
}

CliqueForestInstance gen_clique_forest_instance(Rng& rng, std::size_t umax, std::size_t outside_max) {
  Draft d;
  std::size_t usize = rng.uniform(1, umax);
  std::vector<std::size_t> u;
  for (std::size_t i = 0; i < usize; ++i) u.push_back(d.add("u" + std::to_string(i + 1)));
  complete(d, u);
  std::size_t t = rng.uniform(usize == 1 ? 1 : 0, outside_max);
  std::vector<std::size_t> all = u;
  UnionFind uf(usize + t);
  for (std::size_t i = 0; i < t; ++i) {
    std::size_t v = d.add("x" + std::to_string(i + 1));
    std::size_t to = all[rng.uniform(0, all.size() - 1)];
    d.link(v, to);
    uf.unite(v, to);
    all.push_back(v);
  }
  std::size_t extra = rng.uniform(0, 2);
  for (std::size_t tries = 0; extra > 0 && tries < 30; ++tries) {
    std::size_t a = all[rng.uniform(0, all.size() - 1)];
    std::size_t b = all[rng.uniform(0, all.size() - 1)];
    if (a < usize && b < usize) continue;
    if (!uf.unite(a, b)) continue;
    d.link(a, b);
    --extra;
  }
  return {d.finish(), id_set(d, u)};
}

ReductionInstance gen_reduction_instance(Rng& rng, std::size_t kmax, std::size_t clique_max, std::size_t v0max) {
  for (;;) {
    Draft d;
    std::size_t k = rng.uniform(1, kmax);
    std::size_t v0 = rng.uniform(0, v0max);
    std::vector<std::size_t> part_of;
    std::vector<std::size_t> outer;
    for (std::size_t i = 0; i < v0; ++i) {
      outer.push_back(d.add("a" + std::to_string(i + 1)));
      part_of.push_back(0);
    }
    sprinkle(rng, d, outer, rng.uniform(0, 2), 2);
    std::vector<std::vector<std::size_t>> cliques(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t size = rng.uniform(1, clique_max);
      for (std::size_t j = 0; j < size; ++j) {
        cliques[i].push_back(d.add("c" + std::to_string(i + 1) + "_" + std::to_string(j + 1)));
        part_of.push_back(i + 1);
      }
      complete(d, cliques[i]);
    }
    std::size_t n = d.size();
    if (n < 2) continue;

    // W starts as a random forest on the inner edges; every cross edge joins it.
    MultiGraph inner_only = d.finish();
    EdgeSet w = random_forest(rng, inner_only, inner_only.edge_set(), 1, 4);
    UnionFind wf(n);
    UnionFind gf(n);
    for (const Edge& e : inner_only.edges()) gf.unite(inner_only.index_of(e.a), inner_only.index_of(e.b));
    for (EdgeId e : w) wf.unite(inner_only.index_of(inner_only.edge(e).a), inner_only.index_of(inner_only.edge(e).b));

    std::size_t extras = rng.uniform(0, 2);
    for (std::size_t tries = 0; tries < 200 && (gf.set_count() > 1 || extras > 0); ++tries) {
      std::size_t a = rng.uniform(0, n - 1);
      std::size_t b = rng.uniform(0, n - 1);
      if (a == b || wf.same(a, b)) continue;
      bool joins = !gf.same(a, b);
      if (!joins && gf.set_count() > 1) continue;
      if (part_of[a] == 0 && part_of[b] == 0) {
        d.link(a, b);
        gf.unite(a, b);
        continue;
      }
      if (part_of[a] == part_of[b]) continue;
      EdgeId e = d.link(a, b);
      w.insert(e);
      wf.unite(a, b);
      gf.unite(a, b);
      if (!joins) --extras;
    }
    if (gf.set_count() > 1) continue;
    ReductionInstance out;
    out.graph = d.finish();
    if (w.empty()) w.insert(out.graph.edges()[0].id);
    out.w = w;
    for (const auto& c : cliques) out.cliques.push_back(id_set(d, c));
    return out;
  }
}

std::vector<EdgeSet> random_edge_partition(Rng& rng, const MultiGraph& g, std::size_t kmax) {
  std::size_t k = rng.uniform(1, std::max<std::size_t>(kmax, 1));
  std::vector<EdgeSet> parts(k);
  for (const Edge& e : g.edges()) parts[rng.uniform(0, k - 1)].insert(e.id);
  std::erase_if(parts, [](const EdgeSet& p) { return p.empty(); });
  return parts;
}

// Instances ----------------------------------------------------------------

FormulaInput resolve_input(const MultiGraph& g, const PartitionSpec& spec) {
  FormulaInput in;
  in.graph = g;
  std::vector<VertexSet> cliques;
  for (const auto& c : spec.cliques) cliques.push_back(vertices_named(g, c));
  if (spec.v0) {
    in.partition.v0 = vertices_named(g, *spec.v0);
    in.partition.cliques = cliques;
  } else {
    in.partition = make_partition(g, cliques);
  }
  if (spec.u) {
    in.u = vertices_named(g, *spec.u);
  } else if (cliques.size() == 1) {
    in.u = cliques.front();
  }
  if (spec.s1) in.s1 = vertices_named(g, *spec.s1);
  if (spec.s2) {
    in.s2 = vertices_named(g, *spec.s2);
  } else if (spec.s1) {
    in.s2 = set_difference(set_difference(g.vertex_set(), in.u), in.s1);
  }
  if (spec.w_vertex) in.w_vertex = g.vertex_named(*spec.w_vertex);
  in.w = edges_labeled(g, spec.w_edges);
  in.n = edges_labeled(g, spec.n);
  if (spec.r) in.r = edges_labeled(g, *spec.r);
  if (spec.m) in.m = edges_labeled(g, *spec.m);
  for (const auto& part : spec.edge_parts) in.edge_parts.push_back(edges_labeled(g, part));
  return in;
}

json input_to_json(const FormulaInput& in) {
  const MultiGraph& g = in.graph;
  json sets = json::object();
  if (!in.partition.cliques.empty()) {
    sets["V0"] = names_of(g, in.partition.v0);
    json cliques = json::array();
    for (const auto& c : in.partition.cliques) cliques.push_back(names_of(g, c));
    sets["cliques"] = cliques;
  }
  if (!in.u.empty()) sets["U"] = names_of(g, in.u);
  if (!in.s1.empty()) sets["S1"] = names_of(g, in.s1);
  if (!in.s2.empty()) sets["S2"] = names_of(g, in.s2);
  if (in.w_vertex) sets["w"] = g.vertex(*in.w_vertex).name;
  if (!in.w.empty()) sets["W"] = labels_of(g, in.w);
  if (!in.n.empty()) sets["N"] = labels_of(g, in.n);
  if (!in.r.empty()) sets["R"] = labels_of(g, in.r);
  if (!in.m.empty()) sets["M"] = labels_of(g, in.m);
  if (!in.edge_parts.empty()) {
    json parts = json::array();
    for (const auto& p : in.edge_parts) parts.push_back(labels_of(g, p));
    sets["S"] = parts;
  }
  return {{"graph", graph_to_json(g)}, {"partition", sets}};
}

// Campaigns ----------------------------------------------------------------

json VerificationReport::to_json(bool with_timing) const {
  json fails = json::array();
  for (const auto& f : failures) {
    fails.push_back({{"trial", f.trial}, {"seed", f.seed}, {"message", f.message}, {"instance", f.instance}});
  }
  json out = {{"id", id},
              {"seed", seed},
              {"trials", trials},
              {"skipped", skipped},
              {"failures", fails},
              {"pass", pass()}};
  if (with_timing) out["elapsed_ms"] = elapsed_ms;
  return out;
}

const std::vector<std::string>& campaign_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> all = formula_ids();
    for (const char* extra : {"oracle", "lemma22", "lemma23", "lemma55", "circ"}) all.emplace_back(extra);
    return all;
  }();
  return ids;
}

namespace {

struct Outcome {
  json instance;
  std::optional<std::string> failure;
};

std::string show(const Rational& r) { return to_string(r); }

FormulaInput generate_input(std::string_view id, Rng& rng, const InstanceSpec& spec) {
  FormulaInput in;
  auto source = [&] { return spec.graph ? *spec.graph : gen_line_graph_source(rng, spec.nmax, spec.mmax, spec.multmax); };
  if (id == "moon") {
    in.graph = spec.graph ? *spec.graph : complete_graph(rng.uniform(2, std::min<std::size_t>(spec.nmax, 7)));
    in.m = random_forest(rng, in.graph, in.graph.edge_set(), 1, 3);
  } else if (id == "thm12") {
    MatchingInstance m = gen_matching_instance(rng);
    in.graph = m.graph;
    in.partition = make_partition(m.graph, m.cliques);
  } else if (id == "cor11" || id == "mid" || id == "lsub") {
    in.graph = source();
  } else if (id == "eq14") {
    if (spec.graph) {
      in.graph = *spec.graph;
    } else {
      for (;;) {
        std::size_t r = rng.uniform(1, 4);
        std::size_t n = rng.uniform(2, 6);
        if ((n * r) % 2 != 0 || n * r / 2 > 12 || (r == 1 && n != 2)) continue;
        in.graph = gen_regular_multigraph(rng, n, r);
        break;
      }
    }
  } else if (id == "prop31") {
    CliqueForestInstance c = gen_clique_forest_instance(rng);
    in.graph = c.graph;
    in.u = c.u;
  } else if (id == "thm31" || id == "thm42" || id == "thm53" || id == "cor531") {
    PartitionBounds b;
    b.single_clique = id == "thm31";
    b.parallel_classes = spec.parallel_classes;
    PartitionInstance p = gen_clique_partition_instance(rng, b);
    in.graph = p.graph;
    in.partition = p.partition;
    in.n = p.n;
    if (id == "thm31") in.u = p.partition.cliques.front();
    if (id == "thm53") in.r = p.r;
  } else if (id == "thm54") {
    EdgePartitionInstance e = gen_edge_clique_partition_instance(rng);
    in.graph = e.graph;
    in.edge_parts = e.parts;
  } else if (id == "thm510" || id == "cor51") {
    CutBounds b;
    b.pendant = id == "cor51";
    b.edge_cap = 40;
    CutInstance c = gen_clique_cut_instance(rng, b);
    in.graph = c.graph;
    in.u = c.cut.u;
    in.s1 = c.cut.s1;
    in.s2 = c.cut.s2;
    in.w = c.cut.w;
    in.w_vertex = c.w;
  } else {
    throw Error(ErrorKind::UnknownFormula, std::string(id));
  }
  return in;
}

Outcome formula_trial(std::string_view id, Rng& rng, const InstanceSpec& spec) {
  FormulaInput in = generate_input(id, rng, spec);
  Outcome out{input_to_json(in), std::nullopt};
  EvalOptions fast;
  fast.mode = spec.mode;
  EvalOptions slow = fast;
  slow.route = Route::enumeration;
  FormulaResult a = evaluate_formula(id, in, fast);
  FormulaResult b = evaluate_formula(id, in, slow);
  Count oracle = formula_oracle(id, in);
  if (a.value != Rational(oracle) || b.value != a.value) {
    out.failure = "formula " + show(a.value) + ", by enumeration " + show(b.value) + ", oracle " + to_string(oracle);
  } else if (id == "thm510" && a.details.at("direct") != to_string(oracle)) {
    out.failure = "direct count " + a.details.at("direct") + " differs from oracle " + to_string(oracle);
  }
  return out;
}

Outcome oracle_trial(Rng& rng, const InstanceSpec& spec) {
  MultiGraph g = gen_connected_multigraph(rng, std::min<std::size_t>(spec.nmax, 8), std::min<std::size_t>(spec.mmax, 14),
                                          spec.multmax);
  Outcome out{json{{"graph", graph_to_json(g)}}, std::nullopt};
  Count tau = count_spanning_trees(g);
  std::size_t listed = enumerate_spanning_trees(g).size();
  if (tau != Count(static_cast<unsigned long>(listed))) {
    out.failure = "enumerated " + std::to_string(listed) + " trees, Matrix-Tree gives " + to_string(tau);
    return out;
  }
  if (g.edge_count() > 0) {
    EdgeId e = g.edges()[rng.uniform(0, g.edge_count() - 1)].id;
    Count split = count_spanning_trees(delete_edges(g, {e})) + count_spanning_trees(contract_edges(g, {e}).graph);
    if (split != tau) {
      out.failure = "deletion-contraction on " + g.edge(e).label + " gives " + to_string(split);
      return out;
    }
  }
  EdgeWeighting w;
  for (const Edge& e : g.edges()) w.set(e.id, Rational(static_cast<long>(rng.uniform(1, 5)), static_cast<long>(rng.uniform(1, 3))));
  if (weighted_tree_sum(g, w) != tree_sum_by_enumeration(g, w, {})) out.failure = "weighted sums differ";
  return out;
}

Outcome lemma22_trial(Rng& rng, const InstanceSpec& spec) {
  MultiGraph g = gen_connected_multigraph(rng, std::min<std::size_t>(spec.nmax, 7), spec.mmax, spec.multmax);
  if (g.edge_count() == 0) g = complete_graph(2);
  EdgeSet w = random_forest(rng, g, g.edge_set(), 1, 2);
  if (w.empty()) w.insert(g.edges()[0].id);
  EdgeSet w0;
  for (EdgeId e : w) {
    if (rng.chance(1, 2)) w0.insert(e);
  }
  FormulaInput record;
  record.graph = g;
  record.w = w;
  record.n = w0;
  Outcome out{input_to_json(record), std::nullopt};
  StarResult s = star_graph(g, w);
  Count lhs = count_constrained(g, w);
  Count mid = count_constrained(s.graph, s.new_edges);
  Count rhs = count_constrained(delete_edges(s.graph, w0), s.new_edges);
  if (lhs != mid || mid != rhs) out.failure = to_string(lhs) + " / " + to_string(mid) + " / " + to_string(rhs);
  return out;
}

Outcome lemma23_trial(Rng& rng, const InstanceSpec&) {
  ReductionInstance r = gen_reduction_instance(rng);
  FormulaInput record;
  record.graph = r.graph;
  record.partition = make_partition(r.graph, r.cliques);
  record.w = r.w;
  Outcome out{input_to_json(record), std::nullopt};
  Reduction red = reduce_to_special_case(r.graph, r.cliques, r.w);
  if (!red.certificate.ok()) {
    std::string failed;
    for (const auto& name : red.certificate.failed()) failed += (failed.empty() ? "" : ", ") + name;
    out.failure = "certificate failed: " + failed;
    return out;
  }
  Count target = count_constrained(r.graph, r.w);
  FormulaResult via = thm42_count(red.graph, red.partition, red.n_prime);
  if (via.value != Rational(target)) out.failure = "special-case formula " + show(via.value) + " vs " + to_string(target);
  return out;
}

Outcome lemma55_trial(Rng& rng, const InstanceSpec& spec) {
  MultiGraph g = gen_connected_multigraph(rng, std::min<std::size_t>(spec.nmax, 7), spec.mmax, spec.multmax);
  std::vector<EdgeSet> parts = random_edge_partition(rng, g, 4);
  EdgeSet n = random_forest(rng, g, g.edge_set(), 1, 3);
  FormulaInput record;
  record.graph = g;
  record.edge_parts = parts;
  record.n = n;
  Outcome out{input_to_json(record), std::nullopt};
  DiamondPartition d = diamond_partition(g, parts);
  Count lhs = count_constrained(g, n);
  Count rhs = count_constrained(d.graph, set_union(d.new_edges, n));
  if (lhs != rhs) out.failure = to_string(lhs) + " vs " + to_string(rhs);
  return out;
}

Outcome circ_trial(Rng& rng, const InstanceSpec&) {
  PartitionBounds b;
  b.parallel_classes = true;
  PartitionInstance p = gen_clique_partition_instance(rng, b);
  FormulaInput record;
  record.graph = p.graph;
  record.partition = p.partition;
  record.n = p.n;
  record.r = p.r;
  Outcome out{input_to_json(record), std::nullopt};
  FormulaResult weighted = thm53_count(p.graph, p.partition, p.r, p.n);
  FormulaResult reduced = thm53_reduced(p.graph, p.partition, p.r, p.n);
  EvalOptions slow;
  slow.route = Route::enumeration;
  FormulaResult reduced_slow = thm53_reduced(p.graph, p.partition, p.r, p.n, slow);
  Count oracle = count_constrained(p.graph, set_union(p.r, p.n));
  if (weighted.value != reduced.value || reduced.value != reduced_slow.value || reduced.value != Rational(oracle)) {
    out.failure = "weighted " + show(weighted.value) + ", reduced " + show(reduced.value) + ", reduced by enumeration " +
                  show(reduced_slow.value) + ", oracle " + to_string(oracle);
  }
  return out;
}

}  // namespace

VerificationReport run_campaign(std::string_view id, const InstanceSpec& spec, std::size_t trials) {
  const auto& ids = campaign_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw Error(ErrorKind::UnknownFormula, std::string(id));

  std::function<Outcome(Rng&)> trial;
  if (id == "oracle") {
    trial = [&](Rng& rng) { return oracle_trial(rng, spec); };
  } else if (id == "lemma22") {
    trial = [&](Rng& rng) { return lemma22_trial(rng, spec); };
  } else if (id == "lemma23") {
    trial = [&](Rng& rng) { return lemma23_trial(rng, spec); };
  } else if (id == "lemma55") {
    trial = [&](Rng& rng) { return lemma55_trial(rng, spec); };
  } else if (id == "circ") {
    trial = [&](Rng& rng) { return circ_trial(rng, spec); };
  } else {
    trial = [&](Rng& rng) { return formula_trial(id, rng, spec); };
  }

  VerificationReport report;
  report.id = std::string(id);
  report.trials = trials;
  report.seed = spec.seed;
  auto start = std::chrono::steady_clock::now();
  for (std::size_t t = 0; t < trials; ++t) {
    std::uint64_t seed = trial_seed(spec.seed, t);
    bool done = false;
    for (std::size_t attempt = 0; attempt < std::max<std::size_t>(spec.regenerate_budget, 1) && !done; ++attempt) {
      std::uint64_t attempt_seed = attempt == 0 ? seed : trial_seed(seed, attempt);
      Rng rng(attempt_seed);
      try {
        Outcome o = trial(rng);
        if (o.failure) report.failures.push_back({t, attempt_seed, o.instance, *o.failure});
        done = true;
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::CapExceeded) continue;
        report.failures.push_back({t, attempt_seed, json(), e.what()});
        done = true;
      }
    }
    if (!done) ++report.skipped;
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// Experiment ---------------------------------------------------------------

json IdentityReport::to_json() const {
  return {{"point", to_string(x) + "," + to_string(y)},
          {"trials", trials},
          {"equal_count", equal_count},
          {"counterexamples", counterexamples}};
}

std::vector<IdentityReport> tutte_cut_experiment(std::uint64_t seed, std::size_t trials,
                                                 const std::vector<std::pair<Rational, Rational>>& points,
                                                 const CutBounds& bounds) {
  std::vector<IdentityReport> reports;
  for (const auto& [x, y] : points) {
    IdentityReport r;
    r.x = x;
    r.y = y;
    reports.push_back(r);
  }
  CutBounds b = bounds;
  b.with_w = false;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(trial_seed(seed, t));
    CutInstance c = gen_clique_cut_instance(rng, b);
    require(c.cut.check(c.graph));
    TuttePolynomial whole = tutte_polynomial(c.graph, b.edge_cap);
    TuttePolynomial clique = tutte_polynomial(complete_graph(c.cut.u.size()), b.edge_cap);
    TuttePolynomial side1 = tutte_polynomial(induced_subgraph(c.graph, set_union(c.cut.u, c.cut.s1)), b.edge_cap);
    TuttePolynomial side2 = tutte_polynomial(induced_subgraph(c.graph, set_union(c.cut.u, c.cut.s2)), b.edge_cap);
    for (auto& r : reports) {
      ++r.trials;
      Rational lhs = whole.evaluate(r.x, r.y) * clique.evaluate(r.x, r.y);
      Rational rhs = side1.evaluate(r.x, r.y) * side2.evaluate(r.x, r.y);
      if (lhs == rhs) {
        ++r.equal_count;
        continue;
      }
      json cut = {{"U", names_of(c.graph, c.cut.u)},
                  {"S1", names_of(c.graph, c.cut.s1)},
                  {"S2", names_of(c.graph, c.cut.s2)}};
      r.counterexamples.push_back(
          {{"graph", graph_to_json(c.graph)}, {"cut", cut}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}});
    }
  }
  return reports;
}

}  // namespace treecount
