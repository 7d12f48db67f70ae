#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hskern/kernelize.hpp"
#include "hskern/vertex_reduce.hpp"

namespace hskern {

struct CheckResult {
  std::string invariant;
  bool ok = true;
  std::string detail;  ///< what went wrong, empty when ok
};

/// Maximum matching size by simple augmenting paths, independent of
/// hopcroft_karp.
std::size_t augmenting_path_matching_size(const BipartiteGraph& b);

/// Checks that `m` only uses edges of `b` and no node twice.
bool is_valid_matching(const BipartiteGraph& b, const Matching& m);

/**
 * Runs kernelization and vertex reduction on `h` with budget k and checks
 * every guarantee against the exact oracle: equal decisions, equal minimal
 * solution families, size bounds, the petal cap, sunflower shape, weakly
 * related set properties and the matching. Exponential in k; small inputs only.
 */
std::vector<CheckResult> verify_instance(const Hypergraph& h, std::uint32_t k, const KernelOptions& options = {});

}  // namespace hskern
