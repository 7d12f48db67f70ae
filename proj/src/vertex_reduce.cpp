#include "hskern/vertex_reduce.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace hskern {

BipartiteGraph build_bipartite(const Hypergraph& h, const WeaklyRelatedResult& wr) {
  BipartiteGraph b;
  const std::size_t d = wr.d;
  if (d == 0) return b;

  // S-node identity: records of a fresh store, flag = "already added".
  CoreStore s_nodes = CoreStore::build(Backend::BalancedTree, {}, h.vertex_count());
  std::vector<std::uint32_t> left_of(static_cast<std::size_t>(h.vertex_count()) + 1,
                                     std::numeric_limits<std::uint32_t>::max());
  std::vector<VertexId> rest;
  rest.reserve(d);

  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    EdgeView e = h.edge(i);
    if (e.size() != d) continue;
    for (std::size_t j = 0; j < e.size(); ++j) {
      VertexId v = e[j];
      rest.assign(e.begin(), e.end());
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
      if (!wr.flags.get_flag(rest) || wr.flags.get_flag(KeyView(&v, 1))) continue;

      if (left_of[v] == std::numeric_limits<std::uint32_t>::max()) {
        left_of[v] = static_cast<std::uint32_t>(b.left.size());
        b.left.push_back(v);
      }
      CoreRecord& r = s_nodes.at(rest);
      if (!r.flag) {
        r.flag = true;
        b.right.push_back(rest);
      }
      b.edges.emplace_back(left_of[v], r.index);
    }
  }
  return b;
}

Matching hopcroft_karp(const BipartiteGraph& b) {
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  const std::size_t nl = b.left.size(), nr = b.right.size();

  std::vector<std::vector<std::uint32_t>> adj(nl);
  for (auto [l, r] : b.edges) adj[l].push_back(r);

  std::vector<std::uint32_t> match_l(nl, kNone), match_r(nr, kNone), dist(nl);
  std::vector<std::size_t> next(nl);

  auto bfs = [&]() {
    std::queue<std::uint32_t> q;
    for (std::uint32_t u = 0; u < nl; ++u) {
      if (match_l[u] == kNone) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    bool found = false;
    while (!q.empty()) {
      std::uint32_t u = q.front();
      q.pop();
      for (std::uint32_t r : adj[u]) {
        std::uint32_t w = match_r[r];
        if (w == kNone) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };

  // Iterative DFS along the layered graph; `next` keeps each vertex's
  // adjacency cursor for the whole phase.
  auto dfs = [&](std::uint32_t root) {
    std::vector<std::uint32_t> stack{root};
    while (!stack.empty()) {
      std::uint32_t u = stack.back();
      if (next[u] == adj[u].size()) {
        dist[u] = kInf;
        stack.pop_back();
        if (!stack.empty()) ++next[stack.back()];
        continue;
      }
      std::uint32_t w = match_r[adj[u][next[u]]];
      if (w == kNone) {
        // Every stacked vertex takes the edge its cursor points at.
        for (std::uint32_t x : stack) {
          std::uint32_t rx = adj[x][next[x]];
          match_l[x] = rx;
          match_r[rx] = x;
        }
        return true;
      }
      if (dist[w] == dist[u] + 1)
        stack.push_back(w);
      else
        ++next[u];
    }
    return false;
  };

  while (bfs()) {
    std::fill(next.begin(), next.end(), 0);
    for (std::uint32_t u = 0; u < nl; ++u)
      if (match_l[u] == kNone) dfs(u);
  }

  Matching m;
  for (std::uint32_t u = 0; u < nl; ++u)
    if (match_l[u] != kNone) m.pairs.emplace_back(u, match_l[u]);
  return m;
}

Hypergraph reduce_vertices(const Hypergraph& h, const BipartiteGraph& b, const Matching& m) {
  std::vector<bool> matched(b.left.size(), false);
  for (auto [l, r] : m.pairs) matched[l] = true;
  std::vector<bool> removed(static_cast<std::size_t>(h.vertex_count()) + 1, false);
  for (std::size_t l = 0; l < b.left.size(); ++l)
    if (!matched[l]) removed[b.left[l]] = true;

  std::vector<EdgeIndex> keep;
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    if (!hits(h.edge(i), removed)) keep.push_back(static_cast<EdgeIndex>(i));
  return h.subgraph(keep);
}

VertexReduction reduce_vertex_count(const Hypergraph& h, Backend backend) {
  WeaklyRelatedResult wr = weakly_related_set(h, backend);
  VertexReduction out;
  out.w = wr.w;
  out.graph = build_bipartite(h, wr);
  out.matching = hopcroft_karp(out.graph);
  std::vector<bool> matched(out.graph.left.size(), false);
  for (auto [l, r] : out.matching.pairs) matched[l] = true;
  for (std::size_t l = 0; l < out.graph.left.size(); ++l)
    if (!matched[l]) out.removed.push_back(out.graph.left[l]);
  std::sort(out.removed.begin(), out.removed.end());
  out.reduced = reduce_vertices(h, out.graph, out.matching);
  return out;
}

}  // namespace hskern
