#pragma once

#include <cstddef>
#include <vector>

#include "hskern/core_store.hpp"
#include "hskern/hypergraph.hpp"

namespace hskern {

/// A maximal set W of edges pairwise sharing at most d-2 vertices, plus the
/// flags that seed vertex reduction: flag(C) for every (d-1)-subset C of a W
/// edge and flag({v}) for every vertex v of a W edge.
struct WeaklyRelatedResult {
  std::vector<EdgeIndex> w;
  CoreStore flags;
  std::size_t d = 0;
};

/// Greedy scan in input order: e joins W iff none of its (d-1)-subsets is
/// flagged. Edges with fewer than d-1 vertices always join.
WeaklyRelatedResult weakly_related_set(const Hypergraph& h, Backend backend = Backend::BalancedTree);

/// (d-1)-subsets of e in ascending lexicographic order (e itself if |e| = d-1,
/// nothing if |e| < d-1).
KeyList cardinality_subsets(EdgeView e, std::size_t size);

}  // namespace hskern
