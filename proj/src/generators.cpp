#include "hskern/generators.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "hskern/key_list.hpp"

namespace hskern {

std::uint64_t SplitMix64::next() noexcept {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix64(state_);
}

std::uint64_t SplitMix64::uniform_below(std::uint64_t bound) noexcept {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

Hypergraph golomb(std::uint32_t n) {
  std::vector<std::array<VertexId, 4>> sets;
  std::vector<VertexId> buf;
  for (std::uint32_t t = 1; t <= n; ++t) {
    for (std::uint32_t a = 0; a + t <= n; ++a)
      for (std::uint32_t c = a + 1; c + t <= n; ++c) {
        buf = {a + 1, a + t + 1, c + 1, c + t + 1};
        std::sort(buf.begin(), buf.end());
        buf.erase(std::unique(buf.begin(), buf.end()), buf.end());
        std::array<VertexId, 4> key{};  // 0 pads 3-sets and sorts them first
        std::copy(buf.begin(), buf.end(), key.begin());
        sets.push_back(key);
      }
  }
  auto lex = [](const std::array<VertexId, 4>& x, const std::array<VertexId, 4>& y) {
    std::size_t lx = x[3] ? 4 : 3, ly = y[3] ? 4 : 3;
    return std::lexicographical_compare(x.begin(), x.begin() + lx, y.begin(), y.begin() + ly);
  };
  std::sort(sets.begin(), sets.end(), lex);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  std::vector<std::vector<VertexId>> edges;
  edges.reserve(sets.size());
  for (const auto& s : sets) edges.emplace_back(s.begin(), s.begin() + (s[3] ? 4 : 3));
  return Hypergraph::from_edges(n + 1, edges);
}

Density density_from_string(std::string_view name) {
  if (name == "dense") return Density::Dense;
  if (name == "sparse") return Density::Sparse;
  throw std::invalid_argument("unknown density: " + std::string(name));
}

std::string_view to_string(Density d) noexcept { return d == Density::Dense ? "dense" : "sparse"; }

std::uint64_t edge_target(const RandomSpec& spec) noexcept {
  std::uint64_t n = spec.n;
  return spec.density == Density::Dense ? n * n * n / 12 : n * n;
}

namespace {

// Sets of cardinality 2..n over n vertices: 2^n - n - 1, saturating.
std::uint64_t possible_edges(std::uint64_t n) {
  if (n >= 64) return UINT64_MAX;
  return (std::uint64_t{1} << n) - n - 1;
}

}  // namespace

std::uint32_t binomial_draw(SplitMix64& rng, std::uint32_t mu) noexcept {
  std::uint32_t s = 0;
  for (std::uint32_t left = 2 * mu; left > 0;) {
    std::uint32_t take = std::min<std::uint32_t>(left, 64);
    std::uint64_t word = rng.next();
    if (take < 64) word &= (std::uint64_t{1} << take) - 1;
    s += static_cast<std::uint32_t>(std::popcount(word));
    left -= take;
  }
  return s;
}

Hypergraph random_hypergraph(const RandomSpec& spec) {
  if (spec.mu < 2) throw std::invalid_argument("mu must be at least 2");
  const std::uint64_t m = edge_target(spec);
  if (m > possible_edges(spec.n))
    throw std::invalid_argument("cannot draw " + std::to_string(m) + " distinct edges on " +
                                std::to_string(spec.n) + " vertices");

  SplitMix64 rng(spec.seed);
  std::unordered_set<CoreKey, KeyHash, KeyEqual> seen;
  std::vector<std::vector<VertexId>> edges;
  edges.reserve(m);
  std::vector<VertexId> e;
  while (edges.size() < m) {
    std::uint32_t s;
    do s = binomial_draw(rng, spec.mu);
    while (s <= 1 || s > spec.n);
    // Floyd: for j = n-s+1..n pick t in 1..j; take t, or j if t is taken.
    e.clear();
    for (std::uint32_t j = spec.n - s + 1; j <= spec.n; ++j) {
      auto t = static_cast<VertexId>(rng.uniform_below(j) + 1);
      e.push_back(std::find(e.begin(), e.end(), t) == e.end() ? t : j);
    }
    std::sort(e.begin(), e.end());
    if (seen.insert(e).second) edges.push_back(e);
  }
  return Hypergraph::from_edges(spec.n, edges);
}

}  // namespace hskern
