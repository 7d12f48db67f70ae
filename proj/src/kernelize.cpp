#include "hskern/kernelize.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hskern {

StrategyMode strategy_mode_from_string(std::string_view name) {
  if (name == "auto") return StrategyMode::Auto;
  if (name == "small") return StrategyMode::ForceSmall;
  if (name == "large") return StrategyMode::ForceLarge;
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

LargeIntersect large_intersect_from_string(std::string_view name) {
  if (name == "all") return LargeIntersect::All;
  if (name == "kept") return LargeIntersect::Kept;
  throw std::invalid_argument("unknown --large-vs value '" + std::string(name) + "'");
}

std::string_view to_string(StrategyMode m) noexcept {
  switch (m) {
    case StrategyMode::Auto: return "auto";
    case StrategyMode::ForceSmall: return "small";
    case StrategyMode::ForceLarge: return "large";
  }
  return "?";
}

std::string_view to_string(LargeIntersect m) noexcept { return m == LargeIntersect::All ? "all" : "kept"; }

namespace {

long double factorial(std::size_t d) {
  long double f = 1;
  for (std::size_t i = 2; i <= d; ++i) f *= static_cast<long double>(i);
  return f;
}

}  // namespace

long double kernel_edge_bound(std::size_t d, std::uint64_t k) {
  long double dd = static_cast<long double>(d);
  return factorial(d) * std::pow(dd, dd + 1) * std::pow(static_cast<long double>(k) + 1, dd);
}

long double reduced_vertex_bound(std::size_t d, std::uint64_t k) {
  if (d == 0) return 0;
  long double dd = static_cast<long double>(d);
  return 2 * factorial(d) * std::pow(dd, dd + 1) * std::pow(static_cast<long double>(k) + 1, dd - 1);
}

long double weakly_related_bound(std::size_t d, std::uint64_t k) {
  if (d == 0) return 0;
  long double dd = static_cast<long double>(d);
  return factorial(d) * std::pow(dd, dd) * std::pow(static_cast<long double>(k) + 1, dd - 1);
}

Strategy choose_strategy(std::size_t cardinality, std::size_t edge_count, StrategyMode mode) noexcept {
  switch (mode) {
    case StrategyMode::ForceSmall: return Strategy::Small;
    case StrategyMode::ForceLarge: return Strategy::Large;
    case StrategyMode::Auto: break;
  }
  if (cardinality >= 63) return Strategy::Large;
  return (std::uint64_t{1} << cardinality) <= edge_count ? Strategy::Small : Strategy::Large;
}

namespace {

void append_intersection(EdgeView a, EdgeView b, std::vector<VertexId>& buf, KeyList& out) {
  buf.clear();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      buf.push_back(a[i]);
      ++i;
      ++j;
    }
  }
  out.push_back(buf);
}

void large_candidates(EdgeView e, const Hypergraph& h, std::span<const EdgeIndex> others, KeyList& out) {
  out.clear();
  out.push_back({});
  out.push_back(e);
  std::vector<VertexId> buf;
  buf.reserve(e.size());
  for (EdgeIndex j : others) append_intersection(e, h.edge(j), buf, out);
  out.sort_unique();
}

/// Vertices of e outside core (both sorted).
void difference(EdgeView e, KeyView core, std::vector<VertexId>& out) {
  out.clear();
  std::size_t j = 0;
  for (VertexId v : e) {
    while (j < core.size() && core[j] < v) ++j;
    if (j < core.size() && core[j] == v) continue;
    out.push_back(v);
  }
}

}  // namespace

KeyList core_candidates(EdgeView e, const Hypergraph& h, std::span<const EdgeIndex> others, Strategy strategy) {
  KeyList out;
  if (strategy == Strategy::Small)
    append_subsets(e, out);
  else
    large_candidates(e, h, others, out);
  return out;
}

KernelResult kernelize(const Hypergraph& h, std::uint32_t k, const KernelOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t m = h.edge_count();

  std::vector<Strategy> strategy(m);
  bool any_large = false;
  for (std::size_t i = 0; i < m; ++i) {
    strategy[i] = choose_strategy(h.edge(i).size(), m, options.strategy);
    any_large |= strategy[i] == Strategy::Large;
  }
  std::vector<EdgeIndex> all_edges;
  if (any_large) {
    all_edges.resize(m);
    std::iota(all_edges.begin(), all_edges.end(), EdgeIndex{0});
  }

  KeyList registered;
  if (options.backend == Backend::LazyTrie) {
    // Every core that can ever be probed: Kept-mode candidates are a subset
    // of the All-mode ones.
    KeyList scratch;
    for (std::size_t i = 0; i < m; ++i) {
      if (strategy[i] == Strategy::Small) {
        append_subsets(h.edge(i), registered);
      } else {
        large_candidates(h.edge(i), h, all_edges, scratch);
        for (std::size_t c = 0; c < scratch.size(); ++c) registered.push_back(scratch[c]);
      }
    }
    registered = radix_sort_keys(registered, h.vertex_count());
  }
  CoreStore store = CoreStore::build(options.backend, registered, h.vertex_count(), options.used);
  registered = KeyList{};

  KernelResult result;
  result.stats.edges_in = m;
  KeyList candidates;
  std::vector<VertexId> outside;
  std::vector<CoreRecord*> found;

  for (std::size_t i = 0; i < m; ++i) {
    EdgeView e = h.edge(i);
    if (strategy[i] == Strategy::Small) {
      ++result.stats.small_edges;
      candidates.clear();
      append_subsets(e, candidates);
    } else {
      ++result.stats.large_edges;
      large_candidates(e, h, options.large_vs == LargeIntersect::All ? std::span<const EdgeIndex>(all_edges)
                                                                       : std::span<const EdgeIndex>(result.kept),
                       candidates);
    }

    // Records stay put once created, so the lookups of the keep test are reused.
    found.clear();
    bool keep = true;
    for (std::size_t c = 0; c < candidates.size() && keep; ++c) {
      CoreRecord* r = store.find_mutable(candidates[c]);
      found.push_back(r);
      keep = !r || r->petals <= k;
    }
    if (!keep) continue;

    const auto index = static_cast<EdgeIndex>(i);
    result.kept.push_back(index);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      KeyView core = candidates[c];
      difference(e, core, outside);
      CoreRecord* r = found[c];
      if (r && std::any_of(outside.begin(), outside.end(), [&](VertexId v) { return r->used.contains(v); }))
        continue;
      if (!r) r = &store.at(core);
      ++r->petals;
      for (VertexId v : outside) r->used.insert(v, options.used, h.vertex_count());
      store.add_petal(*r, index);
      if (r->petals == static_cast<std::uint64_t>(k) + 1) {
        KeyView key = store.key(*r);
        result.sunflowers.push_back({CoreKey(key.begin(), key.end()), store.petal_edges(*r)});
      }
    }
  }

  result.kernel = h.subgraph(result.kept);
  result.stats.edges_out = result.kept.size();
  result.stats.vertices_out = result.kernel.live_vertex_count();
  result.stats.cores_registered = store.record_count();
  result.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const std::size_t d = h.max_cardinality();
  const bool bound_applies = options.large_vs == LargeIntersect::All || result.stats.large_edges == 0;
  if (bound_applies && static_cast<long double>(result.stats.edges_out) > kernel_edge_bound(d, k))
    throw std::logic_error("kernel exceeds d!*d^(d+1)*(k+1)^d edges");
  if (result.stats.vertices_out > d * result.stats.edges_out)
    throw std::logic_error("kernel has more than d times as many vertices as edges");
  return result;
}

std::string format_explanation(const std::vector<Sunflower>& sunflowers) {
  std::string out;
  for (const Sunflower& s : sunflowers) {
    out += "core:";
    for (VertexId v : s.core) out += " " + std::to_string(v);
    out += " petals:";
    for (EdgeIndex p : s.petals) out += " " + std::to_string(p);
    out += '\n';
  }
  return out;
}

std::string serialize_result(const KernelResult& r) {
  std::string out = serialize(r.kernel);
  out += "kept:";
  for (EdgeIndex i : r.kept) out += " " + std::to_string(i);
  out += '\n';
  out += format_explanation(r.sunflowers);
  const KernelStats& s = r.stats;
  out += "stats edges_in=" + std::to_string(s.edges_in) + " edges_out=" + std::to_string(s.edges_out) +
         " vertices_out=" + std::to_string(s.vertices_out) + " cores=" + std::to_string(s.cores_registered) +
         " small=" + std::to_string(s.small_edges) + " large=" + std::to_string(s.large_edges) + "\n";
  return out;
}

}  // namespace hskern
