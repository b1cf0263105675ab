#pragma once

#include <memory>
#include <variant>

#include "pathgames/graph.hpp"

namespace pathgames {

/// Two-terminal series-parallel decomposition tree. Leaves are edge ids of
/// the decomposed graph; every node carries its own (source, sink) terminals
/// in original vertex ids. A Series node's left.sink equals right.source.
struct SPTree {
  enum class Kind { Leaf, Series, Parallel };
  Kind kind = Kind::Leaf;
  int edge = -1;  // Leaf only
  std::unique_ptr<SPTree> left, right;
  int source = -1;
  int sink = -1;

  int leaf_count() const {
    if (kind == Kind::Leaf) return 1;
    return left->leaf_count() + right->leaf_count();
  }
};

struct NotSeriesParallel {
  Graph remnant;  // irreducible witness
};

using SPDecomposeResult =
    std::variant<std::unique_ptr<SPTree>, NotSeriesParallel>;

/// Reduce an undirected two-terminal multigraph to a decomposition tree by
/// exhaustive parallel-merge and degree-2 series-merge, or report the
/// irreducible remnant. Vertices unreachable from s are pruned first.
SPDecomposeResult sp_decompose(const Graph& g);

/// Rebuild the graph a tree decomposes, with identity edge labeling.
Graph sp_expand(const SPTree& tree);

}  // namespace pathgames
