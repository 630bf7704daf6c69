#pragma once

#include <map>
#include <vector>

#include "treecount/graph.hpp"
#include "treecount/numeric.hpp"

namespace treecount {

/// Exact-rational weight per edge id; unset edges weigh 1.
class EdgeWeighting {
 public:
  EdgeWeighting() = default;

  Rational operator()(EdgeId e) const;
  void set(EdgeId e, Rational weight);
  bool has(EdgeId e) const { return weights_.contains(e); }
  const std::map<EdgeId, Rational>& explicit_weights() const { return weights_; }

  /// Product of the weights of `es`.
  Rational product(const EdgeSet& es) const;

 private:
  std::map<EdgeId, Rational> weights_;
};

using TreeSum = Rational;

/// Determinant by fraction-free elimination. The matrix is consumed.
Count bareiss_determinant(std::vector<std::vector<Count>> matrix);

/// Determinant by exact rational Gaussian elimination. The matrix is consumed.
Rational rational_determinant(std::vector<std::vector<Rational>> matrix);

/// Number of spanning trees. The reduced Laplacian drops the row and column
/// of the first vertex. Zero for disconnected (or empty) graphs.
Count count_spanning_trees(const MultiGraph& g);

/// Number of spanning trees containing every edge of `required`.
Count count_constrained(const MultiGraph& g, const EdgeSet& required);

/// Sum over spanning trees of the product of edge weights.
TreeSum weighted_tree_sum(const MultiGraph& g, const EdgeWeighting& w);

/// Same sum restricted to trees containing `required`.
TreeSum weighted_tree_sum_constrained(const MultiGraph& g, const EdgeWeighting& w,
                                      const EdgeSet& required);

}  // namespace treecount
