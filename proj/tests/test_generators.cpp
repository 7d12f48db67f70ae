#include <doctest.h>

#include <cmath>
#include <map>

#include "hskern/generators.hpp"
#include "support/brute.hpp"

using namespace hskern;

TEST_CASE("splitmix64 reference values") {
  SplitMix64 rng(1234567);
  CHECK(rng.next() == 6457827717110365317ULL);
  CHECK(rng.next() == 3203168211198807973ULL);
  SplitMix64 b(7);
  for (int i = 0; i < 1000; ++i) CHECK(b.uniform_below(10) < 10);
}

TEST_CASE("golomb small rulers") {
  CHECK(golomb(3).edge_lists() == std::vector<std::vector<VertexId>>{{1, 2, 3}, {1, 2, 3, 4}, {2, 3, 4}});
  CHECK(golomb(3).vertex_count() == 4);
  CHECK(golomb(1).edge_count() == 0);
  CHECK(golomb(0).edge_count() == 0);
  CHECK(golomb(10).edge_count() == 95);
}

TEST_CASE("golomb matches the pair enumeration") {
  for (std::uint32_t n = 0; n <= 24; ++n) {
    auto expected = brute::golomb_sets(n);
    auto got = golomb(n).edge_lists();
    CHECK(std::is_sorted(got.begin(), got.end()));
    CHECK(std::set<std::vector<VertexId>>(got.begin(), got.end()) == expected);
    CHECK(got.size() == expected.size());
  }
}

TEST_CASE("golomb is symmetric under reflection") {
  for (std::uint32_t n = 2; n <= 30; ++n) {
    auto edges = golomb(n).edge_lists();
    std::set<std::vector<VertexId>> all(edges.begin(), edges.end());
    for (const auto& e : edges) {
      std::vector<VertexId> r;
      for (VertexId v : e) r.push_back(n + 2 - v);
      std::sort(r.begin(), r.end());
      CHECK(all.count(r) == 1);
    }
  }
}

TEST_CASE("random instances are reproducible") {
  RandomSpec spec{30, Density::Sparse, 4, 99};
  CHECK(random_hypergraph(spec) == random_hypergraph(spec));
  RandomSpec other = spec;
  other.seed = 100;
  CHECK_FALSE(random_hypergraph(spec) == random_hypergraph(other));
}

TEST_CASE("edge counts and shapes") {
  CHECK(edge_target({100, Density::Dense, 4, 1}) == 83333);
  CHECK(edge_target({100, Density::Sparse, 4, 1}) == 10000);
  Hypergraph h = random_hypergraph({100, Density::Dense, 4, 1});
  CHECK(h.edge_count() == 83333);
  auto edges = h.edge_lists();
  std::set<std::vector<VertexId>> distinct(edges.begin(), edges.end());
  CHECK(distinct.size() == edges.size());
  for (const auto& e : edges) {
    CHECK(e.size() >= 2);
    CHECK(e.size() <= 8);
    CHECK(e.front() >= 1);
    CHECK(e.back() <= 100);
  }
}

TEST_CASE("too many edges requested") {
  CHECK_THROWS_AS(random_hypergraph({2, Density::Sparse, 4, 1}), std::invalid_argument);
  CHECK_NOTHROW(random_hypergraph({3, Density::Dense, 4, 1}));
}

TEST_CASE("density names") {
  CHECK(density_from_string("dense") == Density::Dense);
  CHECK(density_from_string("sparse") == Density::Sparse);
  CHECK(to_string(Density::Dense) == "dense");
  CHECK_THROWS(density_from_string("thick"));
}

TEST_CASE("cardinality distribution is a truncated binomial") {
  const std::uint32_t mu = 4;
  // Binomial(8, 1/2) restricted to 2..8.
  std::map<std::size_t, double> p;
  double total = 0;
  for (std::size_t s = 2; s <= 2 * mu; ++s) {
    double c = 1;
    for (std::size_t i = 0; i < s; ++i) c = c * static_cast<double>(2 * mu - i) / static_cast<double>(i + 1);
    p[s] = c;
    total += c;
  }
  double mean = 0;
  for (auto& [s, w] : p) {
    w /= total;
    mean += static_cast<double>(s) * w;
  }

  std::map<std::size_t, double> seen;
  std::size_t draws = 0;
  double sum = 0;
  SplitMix64 rng(2024);
  while (draws < 100000) {
    std::uint32_t s = binomial_draw(rng, mu);
    if (s <= 1) continue;
    ++seen[s];
    sum += s;
    ++draws;
  }
  Hypergraph h = random_hypergraph({60, Density::Sparse, mu, 3});
  double edge_sum = 0;
  for (std::size_t i = 0; i < h.edge_count(); ++i) edge_sum += static_cast<double>(h.edge(i).size());
  CHECK(std::abs(edge_sum / static_cast<double>(h.edge_count()) - mean) < 0.1);
  CHECK(draws == 100000);
  CHECK(std::abs(sum / static_cast<double>(draws) - mean) < 0.03);
  double chi = 0;
  for (auto [s, w] : p) {
    double expect = w * static_cast<double>(draws);
    chi += (seen[s] - expect) * (seen[s] - expect) / expect;
  }
  CHECK(chi < 24.3);  // 6 degrees of freedom, p = 0.0005
}
