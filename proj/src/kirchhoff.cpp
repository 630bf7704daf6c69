#include "treecount/kirchhoff.hpp"

#include <utility>

#include "treecount/error.hpp"

namespace treecount {

Rational EdgeWeighting::operator()(EdgeId e) const {
  auto it = weights_.find(e);
  return it == weights_.end() ? Rational(1) : it->second;
}

void EdgeWeighting::set(EdgeId e, Rational weight) {
  weight.canonicalize();
  weights_[e] = std::move(weight);
}

Rational EdgeWeighting::product(const EdgeSet& es) const {
  Rational out = 1;
  for (EdgeId e : es) out *= (*this)(e);
  return out;
}

Count bareiss_determinant(std::vector<std::vector<Count>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Count sign = 1;
  Count prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Rational rational_determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[k], m[p]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational factor = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
    }
  }
  return det;
}

namespace {

template <typename T, typename Weight>
std::vector<std::vector<T>> reduced_laplacian(const MultiGraph& g, Weight weight) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<T>> full(n, std::vector<T>(n, T(0)));
  for (const Edge& e : g.edges()) {
    std::size_t a = g.index_of(e.a);
    std::size_t b = g.index_of(e.b);
    T w = weight(e.id);
    full[a][a] += w;
    full[b][b] += w;
    full[a][b] -= w;
    full[b][a] -= w;
  }
  std::vector<std::vector<T>> out(n - 1, std::vector<T>(n - 1));
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) out[i - 1][j - 1] = std::move(full[i][j]);
  }
  return out;
}

}  // namespace

Count count_spanning_trees(const MultiGraph& g) {
  if (g.vertex_count() == 0) return 0;
  return bareiss_determinant(reduced_laplacian<Count>(g, [](EdgeId) { return Count(1); }));
}

Count count_constrained(const MultiGraph& g, const EdgeSet& required) {
  if (!is_forest(g, required)) return 0;
  return count_spanning_trees(contract_edges(g, required).graph);
}

TreeSum weighted_tree_sum(const MultiGraph& g, const EdgeWeighting& w) {
  if (g.vertex_count() == 0) return 0;
  return rational_determinant(reduced_laplacian<Rational>(g, [&](EdgeId e) { return w(e); }));
}

TreeSum weighted_tree_sum_constrained(const MultiGraph& g, const EdgeWeighting& w,
                                      const EdgeSet& required) {
  if (!is_forest(g, required)) return 0;
  return w.product(required) * weighted_tree_sum(contract_edges(g, required).graph, w);
}

}  // namespace treecount
