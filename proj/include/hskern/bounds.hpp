#pragma once

#include <cstddef>
#include <vector>

#include "hskern/hypergraph.hpp"

namespace hskern {

/// lower <= minimum hitting set size <= upper, with witnesses.
struct Bounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::vector<VertexId> witness_upper;   ///< a hitting set of size `upper`, ascending
  std::vector<EdgeIndex> witness_lower;  ///< pairwise disjoint edges
};

struct ApproxResult {
  std::vector<VertexId> solution;    ///< ascending
  std::vector<EdgeIndex> disjoint;   ///< edges whose vertices were taken, in scan order
};

/// Factor-d approximation: scanning in input order, take all vertices of
/// every edge that is still unhit.
ApproxResult approx_d(const Hypergraph& h);

/// Repeatedly take a vertex of maximum degree among unhit edges (ties go to
/// the smallest id) until every edge is hit. Result ascending.
std::vector<VertexId> greedy(const Hypergraph& h);

/// upper = the smaller of the two heuristic solutions (approx_d on ties),
/// lower = number of disjoint edges found by approx_d.
Bounds bounds(const Hypergraph& h);

}  // namespace hskern
