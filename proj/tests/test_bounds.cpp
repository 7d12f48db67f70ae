#include <doctest.h>

#include "hskern/bounds.hpp"
#include "hskern/oracle.hpp"
#include "support/brute.hpp"
#include "support/suite.hpp"

using namespace hskern;

namespace {

bool hits(const Hypergraph& h, const std::vector<VertexId>& s) {
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    EdgeView e = h.edge(i);
    bool hit = false;
    for (VertexId v : s) hit = hit || std::binary_search(e.begin(), e.end(), v);
    if (!hit) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("five-edge instance heuristics") {
  Hypergraph h = suite::five_edges();
  ApproxResult a = approx_d(h);
  CHECK(a.solution == std::vector<VertexId>{1, 2, 3, 4, 5, 7});
  CHECK(a.disjoint == std::vector<EdgeIndex>{0, 2});
  CHECK(greedy(h) == std::vector<VertexId>{1, 3});
  Bounds b = bounds(h);
  CHECK(b.lower == 2);
  CHECK(b.upper == 2);
  CHECK(b.witness_upper == std::vector<VertexId>{1, 3});
  CHECK(b.witness_lower == std::vector<EdgeIndex>{0, 2});
}

TEST_CASE("golomb(10) sandwich") {
  Hypergraph h = golomb(10);
  Bounds b = bounds(h);
  std::size_t opt = optimum(h);
  CHECK(b.lower == 3);
  CHECK(b.upper == 7);
  CHECK(b.lower <= opt);
  CHECK(opt <= b.upper);
}

TEST_CASE("small cases") {
  Hypergraph none = Hypergraph::from_edges(4, {});
  CHECK(bounds(none).lower == 0);
  CHECK(bounds(none).upper == 0);
  CHECK(greedy(none).empty());

  Hypergraph triple = Hypergraph::from_edges(9, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  CHECK(bounds(triple).lower == 3);
  CHECK(bounds(triple).upper == 3);

  Hypergraph star = Hypergraph::from_edges(7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}});
  CHECK(bounds(star).lower == 1);
  CHECK(greedy(star) == std::vector<VertexId>{1});
  CHECK(bounds(star).upper == 1);
}

TEST_CASE("witnesses are valid and the approximation is within factor d") {
  for (const auto& inst : suite::random_instances(120, 5, 18, 9100)) {
    CAPTURE(inst.name);
    const Hypergraph& h = inst.h;
    Bounds b = bounds(h);
    std::size_t opt = brute::optimum(h);
    CHECK(b.lower <= opt);
    CHECK(opt <= b.upper);
    CHECK(b.witness_upper.size() == b.upper);
    CHECK(hits(h, b.witness_upper));
    CHECK(hits(h, greedy(h)));
    CHECK(b.witness_lower.size() == b.lower);
    std::vector<bool> seen(h.vertex_count() + 1, false);
    for (EdgeIndex i : b.witness_lower)
      for (VertexId v : h.edge(i)) {
        CHECK_FALSE(seen[v]);
        seen[v] = true;
      }
    CHECK(approx_d(h).solution.size() <= h.max_cardinality() * opt);
  }
}
