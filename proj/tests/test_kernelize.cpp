#include <doctest.h>

#include <numeric>

#include "hskern/bounds.hpp"
#include "hskern/generators.hpp"
#include "hskern/kernelize.hpp"
#include "hskern/oracle.hpp"
#include "support/brute.hpp"
#include "support/suite.hpp"

using namespace hskern;

TEST_CASE("five-edge instance, k = 2: everything kept, one sunflower") {
  Hypergraph h = suite::five_edges();
  KernelResult r = kernelize(h, 2);
  CHECK(r.kept == std::vector<EdgeIndex>{0, 1, 2, 3, 4});
  CHECK(r.kernel == h);
  REQUIRE(r.sunflowers.size() == 1);
  CHECK(r.sunflowers[0].core == CoreKey{3, 4});
  CHECK(r.sunflowers[0].petals == std::vector<EdgeIndex>{2, 3, 4});
  CHECK(format_explanation(r.sunflowers) == "core: 3 4 petals: 2 3 4\n");
}

TEST_CASE("five-edge instance, k = 1") {
  // After S1 and S3 the empty core already has two disjoint petals, so S4
  // and S5 are rejected.
  Hypergraph h = suite::five_edges();
  KernelResult r = kernelize(h, 1);
  CHECK(r.kept == std::vector<EdgeIndex>{0, 1, 2});
  CHECK(r.sunflowers == std::vector<Sunflower>{{{2}, {0, 1}}, {{}, {0, 2}}, {{3}, {1, 2}}});
  CHECK(brute::minimal_solutions(h, 1) == brute::minimal_solutions(r.kernel, 1));
}

TEST_CASE("empty input") {
  Hypergraph h = Hypergraph::from_edges(4, {});
  for (std::uint32_t k : {0u, 3u}) {
    KernelResult r = kernelize(h, k);
    CHECK(r.kernel.empty());
    CHECK(r.sunflowers.empty());
  }
}

TEST_CASE("k = 0 keeps a single edge per empty core") {
  Hypergraph h = Hypergraph::from_edges(6, {{1, 2}, {3, 4}, {5, 6}});
  KernelResult r = kernelize(h, 0);
  CHECK(r.kept == std::vector<EdgeIndex>{0});
  CHECK_FALSE(min_hitting_set(r.kernel, 0).feasible);
  CHECK_FALSE(min_hitting_set(h, 0).feasible);
}

TEST_CASE("candidate cores") {
  Hypergraph h = suite::five_edges();
  std::vector<VertexId> e347{3, 4, 7}, e349{3, 4, 9}, e12{1, 2};
  CHECK(core_candidates(e347, h, {}, Strategy::Small).size() == 8);
  std::vector<EdgeIndex> kept{2, 3};
  CHECK(core_candidates(e349, h, kept, Strategy::Large).to_vector() == std::vector<CoreKey>{{}, {3, 4}, {3, 4, 9}});
  Hypergraph far = Hypergraph::from_edges(9, {{5, 6}, {7, 8}});
  std::vector<EdgeIndex> both{0, 1};
  CHECK(core_candidates(e12, far, both, Strategy::Large).to_vector() == std::vector<CoreKey>{{}, {1, 2}});
}

TEST_CASE("strategy choice") {
  CHECK(choose_strategy(3, 8, StrategyMode::Auto) == Strategy::Small);
  CHECK(choose_strategy(3, 7, StrategyMode::Auto) == Strategy::Large);
  CHECK(choose_strategy(3, 7, StrategyMode::ForceSmall) == Strategy::Small);
  CHECK(choose_strategy(2, 100, StrategyMode::ForceLarge) == Strategy::Large);
  CHECK(choose_strategy(70, 1000, StrategyMode::Auto) == Strategy::Large);
}

TEST_CASE("size bound formulas") {
  CHECK(kernel_edge_bound(3, 2) == doctest::Approx(6.0 * 81 * 27));
  CHECK(reduced_vertex_bound(3, 2) == doctest::Approx(2 * 6.0 * 81 * 9));
  CHECK(weakly_related_bound(3, 2) == doctest::Approx(6.0 * 27 * 9));
}

TEST_CASE("every option combination preserves minimal solutions") {
  auto instances = suite::random_instances(25, 5, 11, 700);
  for (const auto& inst : instances) {
    std::size_t opt = brute::optimum(inst.h);
    for (std::uint32_t k : {0u, 1u, 2u, static_cast<std::uint32_t>(opt), static_cast<std::uint32_t>(opt + 1)}) {
      auto expected = brute::minimal_solutions(inst.h, k);
      for (StrategyMode s : {StrategyMode::Auto, StrategyMode::ForceSmall, StrategyMode::ForceLarge})
        for (LargeIntersect l : {LargeIntersect::All, LargeIntersect::Kept})
          for (UsedMode u : {UsedMode::Sparse, UsedMode::Dense}) {
            KernelOptions o;
            o.strategy = s;
            o.large_vs = l;
            o.used = u;
            KernelResult r = kernelize(inst.h, k, o);
            CAPTURE(inst.name);
            CAPTURE(k);
            CHECK(brute::minimal_solutions(r.kernel, k) == expected);
            CHECK(brute::feasible(r.kernel, k) == (opt <= k));
          }
    }
  }
}

TEST_CASE("reported sunflowers are sunflowers and every small solution meets their core") {
  for (const auto& inst : suite::random_instances(40, 5, 12, 900)) {
    for (std::uint32_t k = 0; k <= 3; ++k) {
      KernelResult r = kernelize(inst.h, k);
      auto sols = brute::minimal_solutions(inst.h, k);
      for (const Sunflower& s : r.sunflowers) {
        CHECK(s.petals.size() == k + 1);
        CHECK(brute::is_sunflower(inst.h, s.petals, s.core));
        for (const auto& sol : sols) {
          bool meets = std::any_of(s.core.begin(), s.core.end(),
                                   [&](VertexId v) { return std::binary_search(sol.begin(), sol.end(), v); });
          CHECK(meets);
        }
      }
    }
  }
}

TEST_CASE("kernel is a subsequence of the input and its vertex set is the union") {
  for (const auto& inst : suite::random_instances(20, 8, 20, 1300)) {
    KernelResult r = kernelize(inst.h, 2);
    CHECK(std::is_sorted(r.kept.begin(), r.kept.end()));
    CHECK(r.kernel == inst.h.subgraph(r.kept));
    CHECK(r.stats.edges_out == r.kept.size());
    CHECK(r.stats.vertices_out == r.kernel.live_vertex_count());
    CHECK(r.stats.small_edges + r.stats.large_edges == inst.h.edge_count());
  }
}

TEST_CASE("serialized results do not depend on the backend") {
  Hypergraph h = golomb(14);
  for (std::uint32_t k : {1u, 3u}) {
    std::string ref = serialize_result(kernelize(h, k));
    for (Backend b : kAllBackends) {
      KernelOptions o;
      o.backend = b;
      CHECK(serialize_result(kernelize(h, k, o)) == ref);
    }
  }
}

TEST_CASE("option names") {
  CHECK(strategy_mode_from_string("large") == StrategyMode::ForceLarge);
  CHECK(large_intersect_from_string("kept") == LargeIntersect::Kept);
  CHECK(to_string(StrategyMode::Auto) == "auto");
  CHECK_THROWS(strategy_mode_from_string("medium"));
}
