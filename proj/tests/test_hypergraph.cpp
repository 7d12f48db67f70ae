#include <doctest.h>

#include <random>

#include "hskern/hypergraph.hpp"
#include "support/brute.hpp"
#include "support/suite.hpp"

using namespace hskern;

TEST_CASE("parse reads header and edges") {
  Hypergraph h = parse("p hs 9 2\n1 2 5\n2 3 6\n");
  CHECK(h.vertex_count() == 9);
  CHECK(h.edge_lists() == std::vector<std::vector<VertexId>>{{1, 2, 5}, {2, 3, 6}});
}

TEST_CASE("parse canonicalizes and drops repeated edges") {
  Hypergraph h = parse("p hs 3 2\n1 2\n2 1\n");
  CHECK(h.edge_lists() == std::vector<std::vector<VertexId>>{{1, 2}});
}

TEST_CASE("five-edge instance parses with d = 3") {
  Hypergraph h = parse("c example\np hs 9 5\n1 2 5\n2 3 6\n3 4 7\n3 4 8\n3 4 9\n");
  CHECK(h == suite::five_edges());
  CHECK(h.max_cardinality() == 3);
}

TEST_CASE("parse errors carry the line") {
  auto line_of = [](const char* text) {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("p hs 3 1\n1 4\n") == 2);   // vertex outside 1..n
  CHECK(line_of("p xx 3 1\n1 2\n") == 1);   // bad header
  CHECK(line_of("p hs 3 2\n1 2\n\n") == 3);  // empty edge
  CHECK(line_of("p hs 3 2\n1 2\n") > 0);     // too few edges
  CHECK(line_of("p hs 3 1\n1 2\n2 3\n") == 3);
  CHECK_THROWS_AS(parse("p hs 4 1\n1 2 3\n", ParseOptions{2}), ParseError);
  CHECK_NOTHROW(parse("p hs 4 1\n1 2 3\n", ParseOptions{3}));
}

TEST_CASE("serialize") {
  CHECK(serialize(Hypergraph::from_edges(0, {})) == "p hs 0 0\n");
  CHECK(serialize(Hypergraph::from_edges(2, {{2, 1}})) == "p hs 2 1\n1 2\n");
  CHECK(serialize(suite::five_edges()) == "p hs 9 5\n1 2 5\n2 3 6\n3 4 7\n3 4 8\n3 4 9\n");
}

TEST_CASE("round trip on random instances") {
  for (const auto& inst : suite::random_instances(30, 5, 30, 11)) CHECK(parse(serialize(inst.h)) == inst.h);
}

TEST_CASE("canonicalization keeps the optimum") {
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    VertexId n = 3 + rng() % 8;
    std::vector<std::vector<VertexId>> raw;
    std::size_t m = 1 + rng() % 10;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<VertexId> e;
      std::size_t len = 1 + rng() % 4;
      for (std::size_t j = 0; j < len; ++j) e.push_back(1 + rng() % n);
      raw.push_back(e);
      if (rng() % 3 == 0) raw.push_back(e);  // repeat
    }
    // Optimum of the raw lists, computed directly on masks.
    std::vector<std::uint32_t> masks;
    for (const auto& e : raw) {
      std::uint32_t mk = 0;
      for (VertexId v : e) mk |= 1u << (v - 1);
      masks.push_back(mk);
    }
    std::size_t best = n;
    for (std::uint32_t s = 0; s < (1u << n); ++s)
      if (brute::hits_all(masks, s)) best = std::min<std::size_t>(best, std::popcount(s));
    CHECK(brute::optimum(Hypergraph::from_edges(n, raw)) == best);
  }
}

TEST_CASE("from_edges rejects bad input") {
  CHECK_THROWS_AS(Hypergraph::from_edges(3, {{}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph::from_edges(3, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph::from_edges(3, {{4}}), std::invalid_argument);
}
