#include "hskern/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hskern {

namespace {

// Branching over vertex bitsets. A branch that tries vertex v of an edge
// excludes the vertices tried before it, so each vertex set is visited once.
class Brancher {
 public:
  explicit Brancher(const Hypergraph& h)
      : h_(h), words_((static_cast<std::size_t>(h.vertex_count()) + 64) / 64), masks_(h.edge_count() * words_, 0),
        chosen_(words_, 0), excluded_(words_, 0), packed_(words_, 0) {
    for (std::size_t i = 0; i < h.edge_count(); ++i)
      for (VertexId v : h.edge(i)) masks_[i * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  }

  /// Calls `found` with every hitting set reached; stops once it returns true.
  bool run(std::uint32_t k, const std::function<bool(const std::vector<VertexId>&)>& found) {
    found_ = &found;
    return descend(0, k);
  }

 private:
  const std::uint64_t* mask(std::size_t i) const { return masks_.data() + i * words_; }

  bool unhit(std::size_t i) const {
    const std::uint64_t* e = mask(i);
    for (std::size_t w = 0; w < words_; ++w)
      if (e[w] & chosen_[w]) return false;
    return true;
  }

  // Greedy packing of unhit edges restricted to non-excluded vertices. Each
  // packed edge needs its own vertex, so the count is a lower bound. Returns
  // budget + 1 when some unhit edge has no vertex left.
  std::uint32_t packing_bound(std::size_t from, std::uint32_t budget) {
    std::fill(packed_.begin(), packed_.end(), 0);
    std::uint32_t count = 0;
    for (std::size_t i = from; i < h_.edge_count(); ++i) {
      if (!unhit(i)) continue;
      const std::uint64_t* e = mask(i);
      bool empty = true, disjoint = true;
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t avail = e[w] & ~excluded_[w];
        if (avail) empty = false;
        if (avail & packed_[w]) disjoint = false;
      }
      if (empty) return budget + 1;
      if (!disjoint) continue;
      for (std::size_t w = 0; w < words_; ++w) packed_[w] |= e[w] & ~excluded_[w];
      if (++count > budget) return count;
    }
    return count;
  }

  bool descend(std::size_t from, std::uint32_t budget) {
    std::size_t i = from;
    while (i < h_.edge_count() && !unhit(i)) ++i;
    if (i == h_.edge_count()) return (*found_)(current_);
    if (budget == 0 || packing_bound(i, budget) > budget) return false;

    std::vector<VertexId> tried;
    bool stop = false;
    for (VertexId v : h_.edge(i)) {
      std::uint64_t bit = std::uint64_t{1} << (v % 64);
      if (excluded_[v / 64] & bit) continue;
      chosen_[v / 64] |= bit;
      current_.push_back(v);
      stop = descend(i + 1, budget - 1);
      current_.pop_back();
      chosen_[v / 64] &= ~bit;
      if (stop) break;
      excluded_[v / 64] |= bit;
      tried.push_back(v);
    }
    for (VertexId v : tried) excluded_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    return stop;
  }

  const Hypergraph& h_;
  std::size_t words_;
  std::vector<std::uint64_t> masks_, chosen_, excluded_, packed_;
  std::vector<VertexId> current_;
  const std::function<bool(const std::vector<VertexId>&)>* found_ = nullptr;
};

bool is_minimal(const Hypergraph& h, const std::vector<VertexId>& s) {
  // Every vertex needs a private edge: one that no other member hits.
  std::vector<bool> has_private(s.size(), false);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    EdgeView e = h.edge(i);
    std::size_t hit_by = s.size(), count = 0;
    for (std::size_t j = 0; j < s.size() && count < 2; ++j)
      if (std::binary_search(e.begin(), e.end(), s[j])) {
        hit_by = j;
        ++count;
      }
    if (count == 1) has_private[hit_by] = true;
  }
  return std::all_of(has_private.begin(), has_private.end(), [](bool b) { return b; });
}

}  // namespace

SolveOutcome min_hitting_set(const Hypergraph& h, std::uint32_t k) {
  SolveOutcome out;
  Brancher b(h);
  b.run(k, [&](const std::vector<VertexId>& s) {
    std::vector<VertexId> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    out.feasible = true;
    out.solution = std::move(sorted);
    return true;
  });
  return out;
}

std::size_t optimum(const Hypergraph& h) {
  std::uint32_t k = 0;
  while (!min_hitting_set(h, k).feasible) ++k;
  return k;
}

std::vector<std::vector<VertexId>> enumerate_minimal(const Hypergraph& h, std::uint32_t k) {
  std::set<std::vector<VertexId>> family;
  Brancher b(h);
  b.run(k, [&](const std::vector<VertexId>& s) {
    std::vector<VertexId> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (is_minimal(h, sorted)) family.insert(std::move(sorted));
    return false;
  });
  return {family.begin(), family.end()};
}

std::vector<EdgeIndex> max_sunflower_greedy(const Hypergraph& h, KeyView core) {
  std::vector<EdgeIndex> petals;
  std::vector<bool> taken(static_cast<std::size_t>(h.vertex_count()) + 1, false);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    EdgeView e = h.edge(i);
    if (e.size() <= core.size() || !is_subset(core, e)) continue;
    bool clash = false;
    for (VertexId v : e)
      if (taken[v] && !std::binary_search(core.begin(), core.end(), v)) clash = true;
    if (clash) continue;
    for (VertexId v : e)
      if (!std::binary_search(core.begin(), core.end(), v)) taken[v] = true;
    petals.push_back(static_cast<EdgeIndex>(i));
  }
  return petals;
}

}  // namespace hskern
