#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hskern {

/// 1-based dense vertex id. Every id in 1..n is a legal vertex, even if isolated.
using VertexId = std::uint32_t;

/// 0-based position of a hyperedge in its hypergraph.
using EdgeIndex = std::uint32_t;

/// Read-only view of a strictly increasing vertex sequence (a hyperedge or a core).
using KeyView = std::span<const VertexId>;
using EdgeView = KeyView;

/// Owned, strictly increasing vertex sequence. Used for sunflower cores and
/// any other vertex set that is interpreted as a string over 1..n.
using CoreKey = std::vector<VertexId>;

}  // namespace hskern
