#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hskern/core_store.hpp"
#include "hskern/hypergraph.hpp"
#include "hskern/weakly_related.hpp"

namespace hskern {

/// Bipartite graph between independent vertices (left) and (d-1)-subsets of
/// weakly related edges (right). An edge (v, s) stands for the input
/// hyperedge {v} ∪ s.
struct BipartiteGraph {
  std::vector<VertexId> left;
  std::vector<CoreKey> right;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  ///< (left index, right index), construction order
};

struct Matching {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  ///< sorted by left index
  std::size_t size() const noexcept { return pairs.size(); }
};

/// For each cardinality-d edge e and v ∈ e, adds (v, e∖{v}) iff e∖{v} is
/// flagged and {v} is not. Left and right nodes are numbered by first use.
BipartiteGraph build_bipartite(const Hypergraph& h, const WeaklyRelatedResult& wr);

/// Maximum matching. Phases scan left vertices in index order and adjacency
/// in construction order, so the result is a function of the graph alone.
Matching hopcroft_karp(const BipartiteGraph& b);

/// Removes every left vertex without a partner in `m`, together with the
/// hyperedges containing it. Vertex ids are not renumbered.
Hypergraph reduce_vertices(const Hypergraph& h, const BipartiteGraph& b, const Matching& m);

/// kernel -> weakly related set -> bipartite graph -> matching -> reduction.
struct VertexReduction {
  Hypergraph reduced;
  std::vector<EdgeIndex> w;
  BipartiteGraph graph;
  Matching matching;
  std::vector<VertexId> removed;
};

VertexReduction reduce_vertex_count(const Hypergraph& h, Backend backend = Backend::BalancedTree);

}  // namespace hskern
