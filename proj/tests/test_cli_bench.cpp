#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hskern/bench.hpp"
#include "hskern/cli.hpp"
#include "support/suite.hpp"

using namespace hskern;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string example_file() {
  auto path = std::filesystem::temp_directory_path() / "hskern-five-edges.hg";
  std::ofstream(path) << serialize(suite::five_edges());
  return path.string();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("kernelize on five-edge instance") {
  std::string in = example_file();
  Run r = run({"kernelize", "--k", "1", in});
  CHECK(r.code == kExitOk);
  CHECK(parse(r.out) == Hypergraph::from_edges(9, {{1, 2, 5}, {2, 3, 6}, {3, 4, 7}}));
  Run full = run({"kernelize", "--k", "2", in});
  CHECK(parse(full.out) == suite::five_edges());
  Run dflt = run({"kernelize", in});
  CHECK(dflt.out == full.out);
  for (std::string b : {"lazy-trie", "zero-trie", "hash"})
    CHECK(run({"kernelize", "--k", "1", "--backend", b, in}).out == r.out);
}

TEST_CASE("other subcommands on five-edge instance") {
  std::string in = example_file();
  CHECK(run({"weakly-related", in}).out == "0\n1\n2\n");
  CHECK(run({"bounds", in}).out == "lower 2\nupper 2\n");
  CHECK(run({"bounds", "--witness", in}).out == "lower 2\nupper 2\nwitness-upper 1 3\nwitness-lower 0 2\n");
  CHECK(run({"solve", "--k", "1", in}).out == "infeasible\n");
  Run s = run({"solve", "--k", "2", in});
  CHECK(lines(s.out).size() == 2);
  CHECK(lines(s.out)[0] == "feasible");
  CHECK(run({"minimal-solutions", "--k", "2", in}).out == "solutions 4\n1 3\n2 3\n2 4\n3 5\n");
  Run v = run({"verify", "--k", "2", in});
  CHECK(v.code == kExitOk);
  for (const auto& l : lines(v.out)) CHECK(l.rfind("ok ", 0) == 0);
}

TEST_CASE("usage and input errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"kernelize"}).code == kExitUsage);
  CHECK(run({"kernelize", "--backend", "list", example_file()}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  Run missing = run({"bounds", "/nonexistent/file.hg"});
  CHECK(missing.code == kExitUsage);
  CHECK(missing.err.find("cannot open") != std::string::npos);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("generate") {
  Run g = run({"generate", "golomb", "--n", "10"});
  CHECK(g.code == kExitOk);
  CHECK(parse(g.out) == golomb(10));
  Run r = run({"generate", "random", "--n", "12", "--density", "dense", "--seed", "5"});
  CHECK(parse(r.out) == random_hypergraph({12, Density::Dense, 4, 5}));
}

TEST_CASE("bench over golomb rulers") {
  Run r = run({"bench", "--family", "golomb", "--from", "10", "--to", "50", "--step", "10"});
  CHECK(r.code == kExitOk);
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == kBenchHeader);
  CHECK(rows[1].rfind("golomb-0010,10,95,4,", 0) == 0);
  CHECK(rows[5].rfind("golomb-0050,50,", 0) == 0);

  Run empty = run({"bench", "--family", "golomb", "--from", "20", "--to", "10"});
  CHECK(empty.code == kExitOk);
  CHECK(empty.out == std::string(kBenchHeader) + "\n");
}

TEST_CASE("bench rows per backend agree") {
  BenchConfig config;
  config.family = Family::RandomSparse;
  config.sizes = {40};
  config.backends = {Backend::BalancedTree, Backend::HashTable, Backend::LazyTrie, Backend::ZeroTrie};
  config.threads = 2;
  std::ostringstream csv;
  auto recs = bench(config, csv);
  REQUIRE(recs.size() == 4);
  CHECK(recs[0].backend == Backend::LazyTrie);
  CHECK(recs[1].backend == Backend::ZeroTrie);
  CHECK(recs[2].backend == Backend::HashTable);
  CHECK(recs[3].backend == Backend::BalancedTree);
  for (const auto& rec : recs) {
    CHECK(rec.edges_out == recs[0].edges_out);
    CHECK(rec.vertices_out == recs[0].vertices_out);
    CHECK(rec.sunflowers == recs[0].sunflowers);
    CHECK(rec.k == recs[0].k);
  }
  CHECK(lines(csv.str()).size() == 5);
}

TEST_CASE("bench failure leaves a partial marker") {
  BenchConfig config;
  config.family = Family::RandomSparse;
  config.sizes = {5, 2};
  config.threads = 1;
  std::ostringstream csv;
  CHECK_THROWS_AS(bench(config, csv), std::invalid_argument);
  auto rows = lines(csv.str());
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].rfind(instance_name(Family::RandomSparse, 5, 4, 1), 0) == 0);
  CHECK(rows[2].rfind("# partial: ", 0) == 0);
}

TEST_CASE("record formatting") {
  BenchRecord r;
  r.name = "golomb-0010";
  r.n = 10;
  r.edges_in = 95;
  r.d = 4;
  r.k = 7;
  r.edges_out = 95;
  r.vertices_out = 11;
  r.elapsed_ms = 1.5;
  std::string line = format_record(r);
  CHECK(line.rfind("golomb-0010,10,95,4,7,btree,auto,95,11,0,", 0) == 0);
  CHECK(line.back() == ',');
  r.peak_mem = 1024;
  CHECK(format_record(r).substr(format_record(r).rfind(',') + 1) == "1024");
  CHECK(instance_name(Family::Golomb, 7, 4, 1) == "golomb-0007");
}
