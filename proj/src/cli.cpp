#include "hskern/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "hskern/bench.hpp"
#include "hskern/bounds.hpp"
#include "hskern/generators.hpp"
#include "hskern/kernelize.hpp"
#include "hskern/oracle.hpp"
#include "hskern/verify.hpp"
#include "hskern/vertex_reduce.hpp"
#include "hskern/weakly_related.hpp"

namespace hskern {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_all(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw IoError("cannot write " + path);
}

Hypergraph load(const std::string& path, std::optional<std::size_t> max_cardinality = std::nullopt) {
  return parse(read_all(path), ParseOptions{max_cardinality});
}

std::string join(std::span<const VertexId> s) {
  std::string line;
  for (std::size_t i = 0; i < s.size(); ++i) line += (i ? " " : "") + std::to_string(s[i]);
  return line;
}

std::uint32_t budget_or_upper(const std::optional<std::uint32_t>& k, const Hypergraph& h) {
  return k ? *k : static_cast<std::uint32_t>(bounds(h).upper);
}

// Every flag that takes one of our enum spellings.
struct KernelFlags {
  std::string backend = "btree", strategy = "auto", large_vs = "all", used = "sparse";

  void add(CLI::App* app) {
    app->add_option("--backend", backend, "core storage")->check(CLI::IsMember({"lazy-trie", "zero-trie", "hash", "btree"}));
    app->add_option("--strategy", strategy, "candidate cores per edge")->check(CLI::IsMember({"auto", "small", "large"}));
    app->add_option("--large-vs", large_vs, "edges that large edges are intersected with")
        ->check(CLI::IsMember({"all", "kept"}));
    app->add_option("--used", used, "used-vertex sets")->check(CLI::IsMember({"sparse", "dense"}));
  }
  KernelOptions options() const {
    return {backend_from_string(backend), strategy_mode_from_string(strategy), large_intersect_from_string(large_vs),
            used == "dense" ? UsedMode::Dense : UsedMode::Sparse};
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"d-Hitting Set kernelization by sunflowers", "hskern"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write a generated instance");
  gen->require_subcommand(1);
  std::uint32_t gen_n = 0, gen_mu = 4;
  std::uint64_t gen_seed = 0;
  std::string gen_density = "sparse", gen_out;
  auto* gen_golomb = gen->add_subcommand("golomb", "ruler conflict hypergraph, marks 0..n");
  gen_golomb->add_option("--n", gen_n)->required();
  gen_golomb->add_option("out", gen_out);
  auto* gen_random = gen->add_subcommand("random", "seeded random hypergraph");
  gen_random->add_option("--n", gen_n)->required();
  gen_random->add_option("--density", gen_density)->check(CLI::IsMember({"dense", "sparse"}));
  gen_random->add_option("--mu", gen_mu);
  gen_random->add_option("--seed", gen_seed);
  gen_random->add_option("out", gen_out);

  // kernelize
  auto* kern = app.add_subcommand("kernelize", "sunflower kernel");
  std::optional<std::uint32_t> k;
  std::optional<std::size_t> max_card;
  std::string in_path, out_path, explain_path;
  bool reduce = false, show_stats = false;
  KernelFlags kflags;
  kern->add_option("--k", k, "budget (default: computed upper bound)");
  kflags.add(kern);
  kern->add_option("--explain", explain_path, "write sunflowers to this file");
  kern->add_flag("--reduce-vertices", reduce, "also shrink the vertex set");
  kern->add_option("--max-cardinality", max_card, "reject edges larger than this");
  kern->add_flag("--stats", show_stats, "print counters to the error stream");
  kern->add_option("in", in_path)->required();
  kern->add_option("out", out_path);

  // weakly-related
  auto* weak = app.add_subcommand("weakly-related", "print the weakly related set");
  std::string weak_backend = "btree";
  weak->add_option("--backend", weak_backend)->check(CLI::IsMember({"lazy-trie", "zero-trie", "hash", "btree"}));
  weak->add_option("in", in_path)->required();

  // bounds
  auto* bnd = app.add_subcommand("bounds", "lower and upper bound on the optimum");
  bool witness = false;
  bnd->add_flag("--witness", witness, "also print the witnesses");
  bnd->add_option("in", in_path)->required();

  // solve / minimal-solutions / verify
  auto* solve = app.add_subcommand("solve", "exact decision for budget k");
  solve->add_option("--k", k)->required();
  solve->add_option("in", in_path)->required();
  auto* minimal = app.add_subcommand("minimal-solutions", "all inclusion-minimal solutions of size <= k");
  minimal->add_option("--k", k)->required();
  minimal->add_option("in", in_path)->required();
  auto* verify = app.add_subcommand("verify", "check all kernel guarantees with the exact oracle");
  KernelFlags vflags;
  verify->add_option("--k", k, "budget (default: computed upper bound)");
  vflags.add(verify);
  verify->add_option("in", in_path)->required();

  // bench
  auto* bn = app.add_subcommand("bench", "CSV of kernel runs over an instance family");
  std::string family = "golomb";
  std::uint32_t from = 10, to = 50, step = 10, bench_mu = 4;
  std::uint64_t bench_seed = 1;
  std::vector<std::string> backends{"btree"};
  unsigned threads = 0;
  KernelFlags bflags;
  bn->add_option("--family", family)->check(CLI::IsMember({"golomb", "random-dense", "random-sparse"}));
  bn->add_option("--from", from);
  bn->add_option("--to", to);
  bn->add_option("--step", step)->check(CLI::PositiveNumber);
  bn->add_option("--backends", backends)->delimiter(',')->check(CLI::IsMember({"lazy-trie", "zero-trie", "hash", "btree"}));
  bn->add_option("--mu", bench_mu);
  bn->add_option("--seed", bench_seed);
  bn->add_option("--threads", threads, "worker slots (default: HSKERN_THREADS or all cores)");
  bflags.strategy = "auto";
  bn->add_option("--strategy", bflags.strategy)->check(CLI::IsMember({"auto", "small", "large"}));
  bn->add_option("--large-vs", bflags.large_vs)->check(CLI::IsMember({"all", "kept"}));
  bn->add_option("out", out_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      Hypergraph h = gen_golomb->parsed()
                         ? golomb(gen_n)
                         : random_hypergraph({gen_n, density_from_string(gen_density), gen_mu, gen_seed});
      write_all(gen_out, serialize(h), out);
      return kExitOk;
    }

    if (kern->parsed()) {
      Hypergraph h = load(in_path, max_card);
      std::uint32_t budget = budget_or_upper(k, h);
      KernelOptions options = kflags.options();
      KernelResult r = kernelize(h, budget, options);
      Hypergraph result = r.kernel;
      if (reduce) result = reduce_vertex_count(r.kernel, options.backend).reduced;
      if (!explain_path.empty()) write_all(explain_path, format_explanation(r.sunflowers), out);
      write_all(out_path, serialize(result), out);
      if (show_stats)
        err << "k " << budget << " edges_in " << r.stats.edges_in << " edges_out " << r.stats.edges_out
            << " vertices_out " << result.live_vertex_count() << " sunflowers " << r.sunflowers.size()
            << " small " << r.stats.small_edges << " large " << r.stats.large_edges << " elapsed_ms "
            << r.stats.elapsed_ms << '\n';
      return kExitOk;
    }

    if (weak->parsed()) {
      Hypergraph h = load(in_path);
      for (EdgeIndex i : weakly_related_set(h, backend_from_string(weak_backend)).w) out << i << '\n';
      return kExitOk;
    }

    if (bnd->parsed()) {
      Bounds b = bounds(load(in_path));
      out << "lower " << b.lower << "\nupper " << b.upper << '\n';
      if (witness) {
        out << "witness-upper " << join(b.witness_upper) << '\n';
        out << "witness-lower " << join(b.witness_lower) << '\n';
      }
      return kExitOk;
    }

    if (solve->parsed()) {
      SolveOutcome s = min_hitting_set(load(in_path), *k);
      if (s.feasible)
        out << "feasible\n" << join(*s.solution) << '\n';
      else
        out << "infeasible\n";
      return kExitOk;
    }

    if (minimal->parsed()) {
      auto family_sets = enumerate_minimal(load(in_path), *k);
      out << "solutions " << family_sets.size() << '\n';
      for (const auto& s : family_sets) out << join(s) << '\n';
      return kExitOk;
    }

    if (verify->parsed()) {
      Hypergraph h = load(in_path);
      std::uint32_t budget = budget_or_upper(k, h);
      bool ok = true;
      for (const CheckResult& c : verify_instance(h, budget, vflags.options())) {
        if (c.ok) {
          out << "ok " << c.invariant << '\n';
        } else {
          ok = false;
          out << "FAIL " << c.invariant << ' ' << in_path << ' ' << c.detail << '\n';
        }
      }
      return ok ? kExitOk : kExitViolation;
    }

    if (bn->parsed()) {
      BenchConfig config;
      config.family = family_from_string(family);
      for (std::uint32_t n = from; n <= to; n += step) config.sizes.push_back(n);
      config.backends.clear();
      for (const auto& b : backends) config.backends.push_back(backend_from_string(b));
      config.mu = bench_mu;
      config.seed = bench_seed;
      config.threads = threads;
      config.options = bflags.options();
      if (out_path.empty() || out_path == "-") {
        bench(config, out);
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw IoError("cannot write " + out_path);
        bench(config, f);
      }
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << in_path << ":" << e.line() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hskern
