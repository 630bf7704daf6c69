#include "treecount/enumerator.hpp"

#include <algorithm>

#include "treecount/error.hpp"
#include "treecount/union_find.hpp"

namespace treecount {

namespace {

struct Search {
  const MultiGraph& g;
  const std::function<void(const EdgeSet&)>& visit;
  std::size_t cap;
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;
  std::vector<EdgeId> ids;
  std::vector<char> excluded;
  std::vector<char> forced;
  std::size_t produced = 0;

  bool connected_without(std::size_t skip) const {
    UnionFind uf(g.vertex_count());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i != skip && !excluded[i]) uf.unite(a[i], b[i]);
    }
    return uf.set_count() == 1;
  }

  void emit(const EdgeSet& tree) {
    if (++produced > cap) throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(cap) + " trees");
    visit(tree);
  }

  // `uf` holds the components of the included edges.
  void recurse(std::size_t i, UnionFind uf, EdgeSet& tree) {
    if (tree.size() + 1 == g.vertex_count()) {
      emit(tree);
      return;
    }
    if (i == ids.size()) return;
    if (forced[i]) {
      recurse(i + 1, uf, tree);
      return;
    }
    if (!uf.same(a[i], b[i])) {
      UnionFind next = uf;
      next.unite(a[i], b[i]);
      tree.insert(ids[i]);
      recurse(i + 1, std::move(next), tree);
      tree.erase(ids[i]);
    }
    if (connected_without(i)) {
      excluded[i] = 1;
      recurse(i + 1, std::move(uf), tree);
      excluded[i] = 0;
    }
  }
};

}  // namespace

void for_each_spanning_tree(const MultiGraph& g, const EdgeSet& required,
                            const std::function<void(const EdgeSet&)>& visit, std::size_t cap) {
  for (EdgeId e : required) {
    if (!g.has_edge(e)) throw Error(ErrorKind::UnknownEdge, "#" + std::to_string(e.value));
  }
  if (!is_connected(g) || !is_forest(g, required)) return;

  Search s{g, visit, cap, {}, {}, {}, {}, {}};
  std::vector<const Edge*> order;
  for (const Edge& e : g.edges()) order.push_back(&e);
  std::sort(order.begin(), order.end(), [](const Edge* x, const Edge* y) { return x->id < y->id; });
  UnionFind uf(g.vertex_count());
  EdgeSet tree;
  for (const Edge* e : order) {
    s.ids.push_back(e->id);
    s.a.push_back(g.index_of(e->a));
    s.b.push_back(g.index_of(e->b));
    s.excluded.push_back(0);
    s.forced.push_back(required.contains(e->id) ? 1 : 0);
    if (s.forced.back()) {
      uf.unite(s.a.back(), s.b.back());
      tree.insert(e->id);
    }
  }
  s.recurse(0, std::move(uf), tree);
}

TreeList enumerate_spanning_trees(const MultiGraph& g, std::size_t cap) {
  return enumerate_constrained(g, {}, cap);
}

TreeList enumerate_constrained(const MultiGraph& g, const EdgeSet& required, std::size_t cap) {
  TreeList out;
  for_each_spanning_tree(g, required, [&](const EdgeSet& t) { out.push_back(t); }, cap);
  return out;
}

TreeSum tree_sum_by_enumeration(const MultiGraph& g, const EdgeWeighting& w, const EdgeSet& required,
                                std::size_t cap) {
  TreeSum sum = 0;
  for_each_spanning_tree(g, required, [&](const EdgeSet& t) { sum += w.product(t); }, cap);
  return sum;
}

std::size_t incidence(const MultiGraph& g, const EdgeSet& tree, VertexId v) {
  std::size_t count = 0;
  for (EdgeId e : g.incident_edges(v)) {
    if (tree.contains(e)) ++count;
  }
  return count;
}

}  // namespace treecount
