#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hskern/hypergraph.hpp"

namespace hskern {

struct SolveOutcome {
  bool feasible = false;
  std::optional<std::vector<VertexId>> solution;  ///< ascending, set iff feasible
};

/// Exact decision by bounded branching: take the first unhit edge (input
/// order) and try its vertices in ascending order, at most k levels deep.
/// Meant for small instances only.
SolveOutcome min_hitting_set(const Hypergraph& h, std::uint32_t k);

/// Smallest hitting set size, found by calling min_hitting_set with growing k.
std::size_t optimum(const Hypergraph& h);

/// All inclusion-minimal hitting sets with at most k vertices, each ascending,
/// the family sorted lexicographically. {∅} for an edgeless instance.
std::vector<std::vector<VertexId>> enumerate_minimal(const Hypergraph& h, std::uint32_t k);

/// Scans edges in input order and keeps each edge strictly containing `core`
/// whose remaining vertices avoid those of the edges kept so far.
std::vector<EdgeIndex> max_sunflower_greedy(const Hypergraph& h, KeyView core);

}  // namespace hskern
