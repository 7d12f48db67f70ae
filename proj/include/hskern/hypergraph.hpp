#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hskern/types.hpp"

namespace hskern {

/// Thrown by parse() for malformed instance text; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/**
 * A d-Hitting Set instance: vertex universe 1..n plus an ordered sequence of
 * canonical hyperedges (sorted, no repeated vertices, no two equal edges).
 *
 * Edges are stored contiguously; edge(i) returns a view into that storage.
 * Instances are immutable once built.
 */
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Canonicalizes `edges`: each edge is sorted and internally deduplicated,
  /// repeated edges are dropped (first occurrence kept). Throws
  /// std::invalid_argument for empty edges or ids outside 1..n.
  static Hypergraph from_edges(VertexId n, const std::vector<std::vector<VertexId>>& edges);

  VertexId vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return offsets_.size() - 1; }
  bool empty() const noexcept { return edge_count() == 0; }

  /// d: the largest edge cardinality, 0 without edges.
  std::size_t max_cardinality() const noexcept { return d_; }

  EdgeView edge(std::size_t i) const noexcept {
    return {vertices_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

  /// Edges at `indices` (in the given order); the vertex universe is unchanged.
  Hypergraph subgraph(std::span<const EdgeIndex> indices) const;

  /// Number of vertices occurring in at least one edge.
  std::size_t live_vertex_count() const;

  std::vector<std::vector<VertexId>> edge_lists() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) = default;

 private:
  VertexId n_ = 0;
  std::size_t d_ = 0;
  std::vector<VertexId> vertices_;
  std::vector<std::size_t> offsets_{0};
};

struct ParseOptions {
  /// Reject instances whose largest edge exceeds this cardinality.
  std::optional<std::size_t> max_cardinality;
};

/// Reads the `p hs <n> <m>` instance format (comment lines start with `c`).
Hypergraph parse(std::string_view text, const ParseOptions& options = {});

/// Header line, then one edge per line with ascending ids separated by single
/// spaces, LF-terminated. parse(serialize(h)) == h for canonical h.
std::string serialize(const Hypergraph& h);

bool is_subset(KeyView small, KeyView large) noexcept;
std::size_t intersection_size(KeyView a, KeyView b) noexcept;
bool hits(KeyView edge, const std::vector<bool>& chosen) noexcept;

}  // namespace hskern
