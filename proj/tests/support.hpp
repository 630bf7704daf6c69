#pragma once

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "treecount/graph.hpp"
#include "treecount/io.hpp"
#include "treecount/kirchhoff.hpp"
#include "treecount/numeric.hpp"

namespace testing_support {

using namespace treecount;

// Edge-list shorthand: vertices are declared in order of first appearance.
inline MultiGraph graph_of(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> seen;
  std::string header;
  for (std::string line; std::getline(in, line);) {
    std::istringstream words(line);
    std::string kind, a, b;
    if (!(words >> kind)) continue;
    if (kind == "v" && words >> a) {
      if (std::find(seen.begin(), seen.end(), a) == seen.end()) seen.push_back(a);
    }
    if (kind == "e" && words >> a >> b) {
      for (const auto& n : {a, b}) {
        if (std::find(seen.begin(), seen.end(), n) == seen.end()) seen.push_back(n);
      }
    }
  }
  for (const auto& n : seen) header += "v " + n + "\n";
  std::string body;
  std::istringstream again(text);
  for (std::string line; std::getline(again, line);) {
    if (line.rfind("v ", 0) != 0) body += line + "\n";
  }
  return parse_graph_text(header + body);
}

inline EdgeSet labels(const MultiGraph& g, std::initializer_list<const char*> names) {
  EdgeSet out;
  for (const char* n : names) out.insert(g.edge_labeled(n));
  return out;
}

inline VertexSet names(const MultiGraph& g, std::initializer_list<const char*> ns) {
  VertexSet out;
  for (const char* n : ns) out.insert(g.vertex_named(n));
  return out;
}

// Plain DSU, kept apart from the library's so the oracle below shares no code
// with the code under test.
struct Dsu {
  std::vector<std::size_t> up;
  explicit Dsu(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  std::size_t root(std::size_t x) {
    while (up[x] != x) x = up[x];
    return x;
  }
  bool join(std::size_t a, std::size_t b) {
    a = root(a);
    b = root(b);
    if (a == b) return false;
    up[a] = b;
    return true;
  }
};

inline bool is_spanning_tree(const MultiGraph& g, const EdgeSet& es) {
  if (g.vertex_count() == 0 || es.size() + 1 != g.vertex_count()) return false;
  Dsu d(g.vertex_count());
  for (EdgeId e : es) {
    if (!d.join(g.index_of(g.edge(e).a), g.index_of(g.edge(e).b))) return false;
  }
  return true;
}

// Visits every (n-1)-subset of E(G) that is a spanning tree containing `required`.
template <typename Visit>
void brute_force_trees(const MultiGraph& g, const EdgeSet& required, Visit visit) {
  std::size_t n = g.vertex_count();
  if (n == 0) return;
  std::vector<EdgeId> all;
  for (const Edge& e : g.edges()) all.push_back(e.id);
  std::size_t k = n - 1;
  if (k > all.size()) return;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    EdgeSet chosen;
    for (std::size_t i : pick) chosen.insert(all[i]);
    bool covers = std::includes(chosen.begin(), chosen.end(), required.begin(), required.end());
    if (covers && is_spanning_tree(g, chosen)) visit(chosen);
    // next combination
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == all.size() - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

inline Count brute_force_count(const MultiGraph& g, const EdgeSet& required = {}) {
  Count total = 0;
  brute_force_trees(g, required, [&](const EdgeSet&) { ++total; });
  return total;
}

inline Rational brute_force_sum(const MultiGraph& g, const EdgeWeighting& w, const EdgeSet& required = {}) {
  Rational total = 0;
  brute_force_trees(g, required, [&](const EdgeSet& t) {
    Rational term = 1;
    for (EdgeId e : t) term *= w(e);
    total += term;
  });
  return total;
}

inline const char* k4_text() {
  return "v a\nv b\nv c\nv d\ne a b ab\ne a c ac\ne a d ad\ne b c bc\ne b d bd\ne c d cd\n";
}

}  // namespace testing_support
