#include "hskern/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hskern/oracle.hpp"
#include "hskern/weakly_related.hpp"

namespace hskern {

namespace {

std::string ids(std::span<const VertexId> s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace

std::size_t augmenting_path_matching_size(const BipartiteGraph& b) {
  std::vector<std::vector<std::uint32_t>> adj(b.left.size());
  for (auto [l, r] : b.edges) adj[l].push_back(r);
  std::vector<int> owner(b.right.size(), -1);
  std::vector<char> seen;
  std::function<bool(std::uint32_t)> augment = [&](std::uint32_t u) {
    for (std::uint32_t r : adj[u]) {
      if (seen[r]) continue;
      seen[r] = 1;
      if (owner[r] < 0 || augment(static_cast<std::uint32_t>(owner[r]))) {
        owner[r] = static_cast<int>(u);
        return true;
      }
    }
    return false;
  };
  std::size_t size = 0;
  for (std::uint32_t u = 0; u < b.left.size(); ++u) {
    seen.assign(b.right.size(), 0);
    if (augment(u)) ++size;
  }
  return size;
}

bool is_valid_matching(const BipartiteGraph& b, const Matching& m) {
  std::vector<bool> l_used(b.left.size(), false), r_used(b.right.size(), false);
  for (auto [l, r] : m.pairs) {
    if (l >= b.left.size() || r >= b.right.size() || l_used[l] || r_used[r]) return false;
    if (std::find(b.edges.begin(), b.edges.end(), std::pair{l, r}) == b.edges.end()) return false;
    l_used[l] = r_used[r] = true;
  }
  return true;
}

std::vector<CheckResult> verify_instance(const Hypergraph& h, std::uint32_t k, const KernelOptions& options) {
  std::vector<CheckResult> out;
  auto check = [&](std::string name, bool ok, std::string detail) {
    out.push_back({std::move(name), ok, ok ? std::string{} : "k=" + std::to_string(k) + " " + detail});
  };

  KernelResult r = kernelize(h, k, options);
  const Hypergraph& kernel = r.kernel;
  const std::size_t d = h.max_cardinality();

  SolveOutcome in = min_hitting_set(h, k), ker = min_hitting_set(kernel, k);
  check("equivalence", in.feasible == ker.feasible,
        std::string("input ") + (in.feasible ? "yes" : "no") + " kernel " + (ker.feasible ? "yes" : "no"));

  auto fam_in = enumerate_minimal(h, k), fam_ker = enumerate_minimal(kernel, k);
  check("full-kernel", fam_in == fam_ker,
        "input has " + std::to_string(fam_in.size()) + " minimal solutions, kernel " + std::to_string(fam_ker.size()));

  if (options.large_vs == LargeIntersect::All)
    check("edge-bound", static_cast<long double>(kernel.edge_count()) <= kernel_edge_bound(d, k),
          "edges " + std::to_string(kernel.edge_count()));
  check("vertex-bound", kernel.live_vertex_count() <= d * kernel.edge_count(),
        "vertices " + std::to_string(kernel.live_vertex_count()) + " edges " + std::to_string(kernel.edge_count()));

  bool petal_cap = true, shape = true, core_hit = true;
  std::string petal_detail, shape_detail, core_detail;
  for (const Sunflower& s : r.sunflowers) {
    std::size_t size = max_sunflower_greedy(kernel, s.core).size();
    if (size > d * (static_cast<std::size_t>(k) + 1)) {
      petal_cap = false;
      petal_detail = "core " + ids(s.core) + " has " + std::to_string(size) + " petals";
    }
    for (std::size_t a = 0; a < s.petals.size(); ++a)
      for (std::size_t b = a + 1; b < s.petals.size(); ++b) {
        EdgeView x = h.edge(s.petals[a]), y = h.edge(s.petals[b]);
        std::vector<VertexId> common;
        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
        if (common != s.core) {
          shape = false;
          shape_detail = "core " + ids(s.core) + " petals " + std::to_string(s.petals[a]) + "," +
                         std::to_string(s.petals[b]) + " meet in " + ids(common);
        }
      }
    for (const auto& sol : fam_in)
      if (std::none_of(s.core.begin(), s.core.end(),
                       [&](VertexId v) { return std::binary_search(sol.begin(), sol.end(), v); })) {
        core_hit = false;
        core_detail = "solution " + ids(sol) + " misses core " + ids(s.core);
      }
  }
  check("petal-cap", petal_cap, petal_detail);
  check("sunflower-shape", shape, shape_detail);
  check("core-hit", core_hit, core_detail);

  VertexReduction vr = reduce_vertex_count(kernel, options.backend);
  bool disjoint = true, maximal = true;
  std::string disjoint_detail, maximal_detail;
  std::vector<bool> in_w(kernel.edge_count(), false);
  for (EdgeIndex i : vr.w) in_w[i] = true;
  for (std::size_t a = 0; a < vr.w.size(); ++a)
    for (std::size_t b = a + 1; b < vr.w.size(); ++b)
      if (d >= 1 && intersection_size(kernel.edge(vr.w[a]), kernel.edge(vr.w[b])) + 2 > d) {
        disjoint = false;
        disjoint_detail = "edges " + std::to_string(vr.w[a]) + "," + std::to_string(vr.w[b]);
      }
  for (std::size_t i = 0; i < kernel.edge_count(); ++i) {
    if (in_w[i]) continue;
    bool blocked = std::any_of(vr.w.begin(), vr.w.end(),
                               [&](EdgeIndex j) { return intersection_size(kernel.edge(i), kernel.edge(j)) + 1 >= d; });
    if (!blocked) {
      maximal = false;
      maximal_detail = "edge " + std::to_string(i) + " could join";
    }
  }
  check("weakly-related-intersections", disjoint, disjoint_detail);
  check("weakly-related-maximal", maximal, maximal_detail);
  check("weakly-related-bound", static_cast<long double>(vr.w.size()) <= weakly_related_bound(d, k),
        "|W| " + std::to_string(vr.w.size()));

  check("matching-valid", is_valid_matching(vr.graph, vr.matching), "pairs not a matching");
  std::size_t best = augmenting_path_matching_size(vr.graph);
  check("matching-maximum", vr.matching.size() == best,
        "size " + std::to_string(vr.matching.size()) + " maximum " + std::to_string(best));

  if (options.large_vs == LargeIntersect::All)
    check("reduced-vertex-bound",
          static_cast<long double>(vr.reduced.live_vertex_count()) <= reduced_vertex_bound(d, k),
          "vertices " + std::to_string(vr.reduced.live_vertex_count()));
  SolveOutcome red = min_hitting_set(vr.reduced, k);
  check("pipeline-equivalence", red.feasible == in.feasible,
        std::string("input ") + (in.feasible ? "yes" : "no") + " reduced " + (red.feasible ? "yes" : "no"));
  return out;
}

}  // namespace hskern
