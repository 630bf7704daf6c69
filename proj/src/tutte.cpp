#include "treecount/tutte.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "treecount/error.hpp"
#include "treecount/union_find.hpp"

namespace treecount {

TuttePolynomial::TuttePolynomial(Terms terms) : terms_(std::move(terms)) { prune(); }

TuttePolynomial TuttePolynomial::one() { return TuttePolynomial(Terms{{{0, 0}, Count(1)}}); }

Count TuttePolynomial::coefficient(unsigned i, unsigned j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Count(0) : it->second;
}

Rational TuttePolynomial::evaluate(const Rational& x, const Rational& y) const {
  Rational sum = 0;
  for (const auto& [ij, c] : terms_) sum += Rational(c) * power(x, ij.first) * power(y, ij.second);
  return sum;
}

TuttePolynomial& TuttePolynomial::operator+=(const TuttePolynomial& other) {
  for (const auto& [ij, c] : other.terms_) terms_[ij] += c;
  prune();
  return *this;
}

TuttePolynomial TuttePolynomial::shifted(unsigned i, unsigned j) const {
  Terms out;
  for (const auto& [ij, c] : terms_) out.emplace(std::make_pair(ij.first + i, ij.second + j), c);
  return TuttePolynomial(std::move(out));
}

TuttePolynomial operator*(const TuttePolynomial& a, const TuttePolynomial& b) {
  TuttePolynomial::Terms out;
  for (const auto& [p, c] : a.terms_) {
    for (const auto& [r, d] : b.terms_) out[{p.first + r.first, p.second + r.second}] += c * d;
  }
  return TuttePolynomial(std::move(out));
}

void TuttePolynomial::prune() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

std::string TuttePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [ij, c] = *it;
    if (!out.empty()) out += " + ";
    std::string mono;
    if (ij.first > 0) mono += ij.first == 1 ? "x" : "x^" + std::to_string(ij.first);
    if (ij.second > 0) mono += ij.second == 1 ? "y" : "y^" + std::to_string(ij.second);
    if (mono.empty()) {
      out += c.get_str();
    } else {
      out += (c == 1 ? "" : c.get_str()) + mono;
    }
  }
  return out;
}

namespace {

// Minor with loops retained: vertices 0..n-1, edges as endpoint pairs.
using EdgeList = std::vector<std::pair<unsigned, unsigned>>;

// Relabels vertices by first appearance and sorts, so equal minors that only
// differ by edge order or vertex numbering of that kind share a memo entry.
std::string normalize(EdgeList& edges) {
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  std::unordered_map<unsigned, unsigned> relabel;
  for (auto& e : edges) {
    for (unsigned* v : {&e.first, &e.second}) {
      auto [it, fresh] = relabel.emplace(*v, static_cast<unsigned>(relabel.size()));
      *v = it->second;
    }
  }
  std::string key;
  for (const auto& e : edges) key += std::to_string(e.first) + "-" + std::to_string(e.second) + ",";
  return key;
}

struct Engine {
  std::unordered_map<std::string, TuttePolynomial> memo;

  static bool connected_without(const EdgeList& edges, std::size_t skip, unsigned a, unsigned b) {
    unsigned n = 0;
    for (const auto& e : edges) n = std::max({n, e.first + 1, e.second + 1});
    UnionFind uf(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i != skip) uf.unite(edges[i].first, edges[i].second);
    }
    return uf.same(a, b);
  }

  TuttePolynomial run(EdgeList edges) {
    if (edges.empty()) return TuttePolynomial::one();
    std::string key = normalize(edges);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // Peel loops and bridges first; each is a pure factor.
    unsigned loops = 0;
    EdgeList rest;
    for (const auto& e : edges) {
      if (e.first == e.second) {
        ++loops;
      } else {
        rest.push_back(e);
      }
    }
    TuttePolynomial out;
    if (loops > 0) {
      out = run(rest).shifted(0, loops);
    } else {
      auto [a, b] = edges.front();
      EdgeList contracted;
      for (std::size_t i = 1; i < edges.size(); ++i) {
        auto e = edges[i];
        if (e.first == b) e.first = a;
        if (e.second == b) e.second = a;
        contracted.push_back(e);
      }
      if (!connected_without(edges, 0, a, b)) {
        out = run(contracted).shifted(1, 0);
      } else {
        EdgeList deleted(edges.begin() + 1, edges.end());
        out = run(deleted);
        out += run(contracted);
      }
    }
    memo.emplace(std::move(key), out);
    return out;
  }
};

}  // namespace

TuttePolynomial tutte_polynomial(const MultiGraph& g, std::size_t edge_cap) {
  if (g.edge_count() > edge_cap) {
    throw Error(ErrorKind::CapExceeded, std::to_string(g.edge_count()) + " edges exceed the cap of " +
                                            std::to_string(edge_cap));
  }
  EdgeList edges;
  for (const Edge& e : g.edges()) {
    edges.emplace_back(static_cast<unsigned>(g.index_of(e.a)), static_cast<unsigned>(g.index_of(e.b)));
  }
  Engine engine;
  return engine.run(std::move(edges));
}

Rational evaluate(const TuttePolynomial& t, const Rational& x, const Rational& y) { return t.evaluate(x, y); }

IdentityCheck clique_cut_identity(const MultiGraph& g, const CliqueCut& cut, const Rational& x, const Rational& y,
                                  std::size_t edge_cap) {
  require(cut.check(g));
  TuttePolynomial whole = tutte_polynomial(g, edge_cap);
  TuttePolynomial clique = tutte_polynomial(complete_graph(cut.u.size()), edge_cap);
  TuttePolynomial side1 = tutte_polynomial(induced_subgraph(g, set_union(cut.u, cut.s1)), edge_cap);
  TuttePolynomial side2 = tutte_polynomial(induced_subgraph(g, set_union(cut.u, cut.s2)), edge_cap);
  IdentityCheck out;
  out.lhs = whole.evaluate(x, y) * clique.evaluate(x, y);
  out.rhs = side1.evaluate(x, y) * side2.evaluate(x, y);
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace treecount
