#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hskern/core_store.hpp"
#include "hskern/hypergraph.hpp"
#include "hskern/key_list.hpp"

namespace hskern {

/// Which cores are examined for an incoming edge e.
enum class Strategy {
  Small,  ///< every subset of e
  Large,  ///< e, the empty set, and every intersection of e with another edge
};

enum class StrategyMode {
  Auto,        ///< Small iff 2^|e| <= |E|, decided per edge
  ForceSmall,
  ForceLarge,
};

/// Edges a Large edge is intersected with.
enum class LargeIntersect {
  All,   ///< every other input edge
  Kept,  ///< only edges already in the kernel (cheaper, may miss cores)
};

StrategyMode strategy_mode_from_string(std::string_view name);
LargeIntersect large_intersect_from_string(std::string_view name);
std::string_view to_string(StrategyMode m) noexcept;
std::string_view to_string(LargeIntersect m) noexcept;

struct KernelOptions {
  Backend backend = Backend::BalancedTree;
  StrategyMode strategy = StrategyMode::Auto;
  LargeIntersect large_vs = LargeIntersect::All;
  UsedMode used = UsedMode::Sparse;
};

/// Edges whose pairwise intersections all equal `core`. `petals` are indices
/// into the input hypergraph.
struct Sunflower {
  CoreKey core;
  std::vector<EdgeIndex> petals;

  friend bool operator==(const Sunflower&, const Sunflower&) = default;
};

struct KernelStats {
  std::size_t edges_in = 0;
  std::size_t edges_out = 0;
  std::size_t vertices_out = 0;
  std::size_t cores_registered = 0;  ///< cores that received at least one petal
  std::size_t small_edges = 0;
  std::size_t large_edges = 0;
  double elapsed_ms = 0.0;
};

struct KernelResult {
  Hypergraph kernel;              ///< kept edges in input order; vertex ids unchanged
  std::vector<EdgeIndex> kept;    ///< input positions of the kernel edges
  std::vector<Sunflower> sunflowers;  ///< cores whose petal count reached k+1, in discovery order
  KernelStats stats;
};

/// Upper bound d!·d^(d+1)·(k+1)^d on the kernel's edges (saturates to +inf).
long double kernel_edge_bound(std::size_t d, std::uint64_t k);
/// Upper bound 2·d!·d^(d+1)·(k+1)^(d-1) on the vertices after vertex reduction.
long double reduced_vertex_bound(std::size_t d, std::uint64_t k);
/// Upper bound d!·d^d·(k+1)^(d-1) on a maximal weakly related set of a kernel.
long double weakly_related_bound(std::size_t d, std::uint64_t k);

Strategy choose_strategy(std::size_t cardinality, std::size_t edge_count, StrategyMode mode) noexcept;

/// Cores examined for `e` under `strategy`, sorted and deduplicated. For
/// Large, `others` lists the edges of `h` to intersect with.
KeyList core_candidates(EdgeView e, const Hypergraph& h, std::span<const EdgeIndex> others, Strategy strategy);

/**
 * Sunflower kernelization. Edges are taken in input order; an edge is kept
 * unless one of its candidate cores already has k+1 petals among the kept
 * edges. Every kept edge becomes a petal of each candidate core whose used
 * vertices it avoids. The result has the same hitting sets of size <= k
 * (inclusion-minimal ones included) as `h`.
 *
 * Throws std::logic_error if the size bound is violated; this cannot happen
 * unless LargeIntersect::Kept is in effect, for which the bound is not
 * checked.
 */
KernelResult kernelize(const Hypergraph& h, std::uint32_t k, const KernelOptions& options = {});

/// `core: <ids> petals: <edge indices>` per sunflower, LF-terminated.
std::string format_explanation(const std::vector<Sunflower>& sunflowers);

/// Backend-independent text form of a result (kernel, sunflowers, counters
/// except elapsed time). Equal inputs and flags give equal bytes.
std::string serialize_result(const KernelResult& r);

}  // namespace hskern
