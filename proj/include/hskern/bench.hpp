#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hskern/generators.hpp"
#include "hskern/kernelize.hpp"

namespace hskern {

enum class Family { Golomb, RandomDense, RandomSparse };

Family family_from_string(std::string_view name);
std::string_view to_string(Family f) noexcept;

struct BenchRecord {
  std::string name;
  std::uint32_t n = 0;
  std::size_t edges_in = 0;
  std::size_t d = 0;
  std::uint32_t k = 0;
  Backend backend = Backend::BalancedTree;
  StrategyMode strategy = StrategyMode::Auto;
  std::size_t edges_out = 0;
  std::size_t vertices_out = 0;
  std::size_t sunflowers = 0;
  double elapsed_ms = 0.0;
  std::optional<std::uint64_t> peak_mem;  ///< bytes; absent when the platform cannot tell
};

struct BenchConfig {
  Family family = Family::Golomb;
  std::vector<std::uint32_t> sizes;       ///< values of n, in output order
  std::vector<Backend> backends{Backend::BalancedTree};
  std::uint32_t mu = 4;
  std::uint64_t seed = 1;
  KernelOptions options;                  ///< backend field is overridden per row
  unsigned threads = 0;                   ///< 0: HSKERN_THREADS, else hardware concurrency
};

inline constexpr std::string_view kBenchHeader =
    "name,n,edges_in,d,k,backend,strategy,edges_out,vertices_out,sunflowers,elapsed_ms,peak_mem";

std::string instance_name(Family f, std::uint32_t n, std::uint32_t mu, std::uint64_t seed);
Hypergraph make_instance(Family f, std::uint32_t n, std::uint32_t mu, std::uint64_t seed);

/// CSV line without a trailing newline.
std::string format_record(const BenchRecord& r);

/// Process peak resident set size in bytes, if available.
std::optional<std::uint64_t> peak_memory_bytes();

/**
 * Writes the header and one row per (n, backend), rows ordered by n as given
 * and then by backend in the order lazy-trie, zero-trie, hash, btree. For
 * every instance k is the computed upper bound. Cells may run in parallel.
 * On a failure the rows finished so far are written, followed by a
 * `# partial: <reason>` line, and the exception is rethrown.
 */
std::vector<BenchRecord> bench(const BenchConfig& config, std::ostream& csv);

}  // namespace hskern
