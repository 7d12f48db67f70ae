#pragma once

#include <cstdint>
#include <string_view>

#include "hskern/hypergraph.hpp"

namespace hskern {

/// SplitMix64: state advances by 0x9E3779B97F4A7C15, output is mix64(state).
/// Small, seedable and easy to reproduce in any language.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t next() noexcept;
  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t uniform_below(std::uint64_t bound) noexcept;

 private:
  std::uint64_t state_;
};

/// Conflict hypergraph of the ruler with marks 0..n. Mark i is vertex i+1.
/// Two different mark pairs at equal distance give the edge formed by their
/// union (3 or 4 marks). Edges are distinct and in lexicographic order.
Hypergraph golomb(std::uint32_t n);

enum class Density {
  Dense,   ///< m = floor(n^3 / 12)
  Sparse,  ///< m = n^2
};

Density density_from_string(std::string_view name);
std::string_view to_string(Density d) noexcept;

struct RandomSpec {
  std::uint32_t n = 0;
  Density density = Density::Sparse;
  std::uint32_t mu = 4;
  std::uint64_t seed = 0;
};

/// Popcount of the low 2*mu bits drawn from `rng`, one word per 64 bits.
std::uint32_t binomial_draw(SplitMix64& rng, std::uint32_t mu) noexcept;

std::uint64_t edge_target(const RandomSpec& spec) noexcept;

/**
 * m distinct random edges over 1..n. Per edge: s = popcount of 2*mu random
 * bits (Binomial(2mu, 1/2)), redrawn while s <= 1 or s > n; then s distinct
 * vertices by Floyd's sampling. An edge equal to an earlier one is redrawn.
 * Throws std::invalid_argument if m exceeds the number of possible edges.
 */
Hypergraph random_hypergraph(const RandomSpec& spec);

}  // namespace hskern
