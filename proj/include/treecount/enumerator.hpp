#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "treecount/graph.hpp"
#include "treecount/kirchhoff.hpp"

namespace treecount {

inline constexpr std::size_t kDefaultTreeCap = 1'000'000;

using TreeList = std::vector<EdgeSet>;

/// Visits every spanning tree containing `required`, branching on edges in
/// increasing id order (include first, then exclude). Exclusion is only tried
/// when the remaining edges still connect the graph, so every leaf is a tree.
/// Throws CapExceeded once more than `cap` trees have been produced.
void for_each_spanning_tree(const MultiGraph& g, const EdgeSet& required,
                            const std::function<void(const EdgeSet&)>& visit,
                            std::size_t cap = kDefaultTreeCap);

TreeList enumerate_spanning_trees(const MultiGraph& g, std::size_t cap = kDefaultTreeCap);

TreeList enumerate_constrained(const MultiGraph& g, const EdgeSet& required,
                               std::size_t cap = kDefaultTreeCap);

TreeSum tree_sum_by_enumeration(const MultiGraph& g, const EdgeWeighting& w, const EdgeSet& required,
                                std::size_t cap = kDefaultTreeCap);

/// |E_T(v)|: number of tree edges at v.
std::size_t incidence(const MultiGraph& g, const EdgeSet& tree, VertexId v);

}  // namespace treecount
