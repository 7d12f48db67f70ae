#include "hskern/bounds.hpp"

#include <algorithm>
#include <queue>
#include <utility>

namespace hskern {

ApproxResult approx_d(const Hypergraph& h) {
  ApproxResult out;
  std::vector<bool> chosen(static_cast<std::size_t>(h.vertex_count()) + 1, false);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    EdgeView e = h.edge(i);
    if (hits(e, chosen)) continue;
    out.disjoint.push_back(static_cast<EdgeIndex>(i));
    for (VertexId v : e) {
      chosen[v] = true;
      out.solution.push_back(v);
    }
  }
  std::sort(out.solution.begin(), out.solution.end());
  return out;
}

std::vector<VertexId> greedy(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  std::vector<std::vector<EdgeIndex>> incident(n + 1);
  std::vector<std::size_t> degree(n + 1, 0);
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    for (VertexId v : h.edge(i)) {
      incident[v].push_back(static_cast<EdgeIndex>(i));
      ++degree[v];
    }

  // Max-heap on (degree, -id); entries whose degree is stale are skipped.
  using Entry = std::pair<std::size_t, std::int64_t>;
  std::priority_queue<Entry> heap;
  for (VertexId v = 1; v <= n; ++v)
    if (degree[v] > 0) heap.emplace(degree[v], -static_cast<std::int64_t>(v));

  std::vector<bool> hit(h.edge_count(), false);
  std::vector<VertexId> solution;
  while (!heap.empty()) {
    auto [deg, neg_id] = heap.top();
    heap.pop();
    auto v = static_cast<VertexId>(-neg_id);
    if (deg != degree[v] || deg == 0) continue;
    solution.push_back(v);
    for (EdgeIndex i : incident[v]) {
      if (hit[i]) continue;
      hit[i] = true;
      for (VertexId u : h.edge(i)) {
        --degree[u];
        if (u != v && degree[u] > 0) heap.emplace(degree[u], -static_cast<std::int64_t>(u));
      }
    }
  }
  std::sort(solution.begin(), solution.end());
  return solution;
}

Bounds bounds(const Hypergraph& h) {
  ApproxResult approx = approx_d(h);
  std::vector<VertexId> greedy_solution = greedy(h);
  Bounds b;
  b.lower = approx.disjoint.size();
  b.witness_lower = std::move(approx.disjoint);
  if (greedy_solution.size() < approx.solution.size())
    b.witness_upper = std::move(greedy_solution);
  else
    b.witness_upper = std::move(approx.solution);
  b.upper = b.witness_upper.size();
  return b;
}

}  // namespace hskern
