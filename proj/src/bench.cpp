#include "hskern/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#if __has_include(<sys/resource.h>)
#include <sys/resource.h>
#define HSKERN_HAVE_RUSAGE 1
#endif

#include "hskern/bounds.hpp"

namespace hskern {

Family family_from_string(std::string_view name) {
  if (name == "golomb") return Family::Golomb;
  if (name == "random-dense") return Family::RandomDense;
  if (name == "random-sparse") return Family::RandomSparse;
  throw std::invalid_argument("unknown family: " + std::string(name));
}

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::Golomb: return "golomb";
    case Family::RandomDense: return "random-dense";
    case Family::RandomSparse: return "random-sparse";
  }
  return "?";
}

std::string instance_name(Family f, std::uint32_t n, std::uint32_t mu, std::uint64_t seed) {
  char buf[96];
  if (f == Family::Golomb)
    std::snprintf(buf, sizeof buf, "golomb-%04u", n);
  else
    std::snprintf(buf, sizeof buf, "avg%uran-%04u-%s-s%llu", mu, n, f == Family::RandomDense ? "dense" : "sparse",
                  static_cast<unsigned long long>(seed));
  return buf;
}

Hypergraph make_instance(Family f, std::uint32_t n, std::uint32_t mu, std::uint64_t seed) {
  if (f == Family::Golomb) return golomb(n);
  return random_hypergraph({n, f == Family::RandomDense ? Density::Dense : Density::Sparse, mu, seed});
}

std::string format_record(const BenchRecord& r) {
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed_ms);
  std::string line = r.name + ',' + std::to_string(r.n) + ',' + std::to_string(r.edges_in) + ',' +
                     std::to_string(r.d) + ',' + std::to_string(r.k) + ',' + std::string(to_string(r.backend)) +
                     ',' + std::string(to_string(r.strategy)) + ',' + std::to_string(r.edges_out) + ',' +
                     std::to_string(r.vertices_out) + ',' + std::to_string(r.sunflowers) + ',' + elapsed + ',';
  if (r.peak_mem) line += std::to_string(*r.peak_mem);
  return line;
}

std::optional<std::uint64_t> peak_memory_bytes() {
#ifdef HSKERN_HAVE_RUSAGE
  rusage usage{};
  if (getrusage(RUSAGE_SELF, &usage) == 0 && usage.ru_maxrss > 0)
    return static_cast<std::uint64_t>(usage.ru_maxrss) * 1024;  // Linux reports KiB
#endif
  return std::nullopt;
}

namespace {

unsigned worker_slots(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HSKERN_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

std::vector<BenchRecord> bench(const BenchConfig& config, std::ostream& csv) {
  csv << kBenchHeader << '\n';

  std::vector<Backend> backends;
  for (Backend b : kAllBackends)
    if (std::find(config.backends.begin(), config.backends.end(), b) != config.backends.end())
      backends.push_back(b);

  std::vector<BenchRecord> rows;
  std::size_t written = 0;
  auto flush = [&] {
    for (; written < rows.size(); ++written) csv << format_record(rows[written]) << '\n';
  };

  try {
    for (std::uint32_t n : config.sizes) {
      Hypergraph h = make_instance(config.family, n, config.mu, config.seed);
      auto k = static_cast<std::uint32_t>(bounds(h).upper);

      std::vector<BenchRecord> cells(backends.size());
      std::vector<std::exception_ptr> errors(backends.size());
      std::atomic<std::size_t> next{0};
      auto work = [&] {
        for (std::size_t c; (c = next.fetch_add(1)) < backends.size();) {
          try {
            KernelOptions options = config.options;
            options.backend = backends[c];
            KernelResult r = kernelize(h, k, options);
            BenchRecord& rec = cells[c];
            rec.name = instance_name(config.family, n, config.mu, config.seed);
            rec.n = n;
            rec.edges_in = h.edge_count();
            rec.d = h.max_cardinality();
            rec.k = k;
            rec.backend = backends[c];
            rec.strategy = options.strategy;
            rec.edges_out = r.stats.edges_out;
            rec.vertices_out = r.stats.vertices_out;
            rec.sunflowers = r.sunflowers.size();
            rec.elapsed_ms = r.stats.elapsed_ms;
            rec.peak_mem = peak_memory_bytes();
          } catch (...) {
            errors[c] = std::current_exception();
          }
        }
      };
      unsigned slots = std::min<std::size_t>(worker_slots(config.threads), std::max<std::size_t>(1, backends.size()));
      if (slots <= 1) {
        work();
      } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < slots; ++t) pool.emplace_back(work);
      }
      for (std::size_t c = 0; c < backends.size(); ++c) {
        if (errors[c]) std::rethrow_exception(errors[c]);
        rows.push_back(std::move(cells[c]));
      }
      flush();
    }
  } catch (const std::exception& e) {
    flush();
    csv << "# partial: " << e.what() << '\n';
    csv.flush();
    throw;
  }
  return rows;
}

}  // namespace hskern
