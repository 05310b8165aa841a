#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <thread>

#include "mcr/arrangement.hpp"
#include "mcr/bench.hpp"
#include "mcr/combinatorics.hpp"

namespace mcr {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kExact: return "exact";
    case Algorithm::kGreedy: return "greedy";
    case Algorithm::kWeighted: return "weighted";
    case Algorithm::kUnitWeighted: return "unit-weighted";
    case Algorithm::kOracle: return "oracle";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kExact, Algorithm::kGreedy,
                      Algorithm::kWeighted, Algorithm::kUnitWeighted,
                      Algorithm::kOracle}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

Solution solve(const ArrangementGraph& graph, Algorithm algorithm,
               std::optional<int> alpha, std::optional<Deadline> deadline) {
  switch (algorithm) {
    case Algorithm::kExact: {
      ExactOptions options;
      options.alpha = alpha;
      options.deadline = deadline;
      return exact_mcr(graph, options);
    }
    case Algorithm::kGreedy:
      return greedy_mcr(graph, deadline);
    case Algorithm::kWeighted:
      return weighted_bound(graph, WeightMode::kIntersection);
    case Algorithm::kUnitWeighted:
      return weighted_bound(graph, WeightMode::kUnit);
    case Algorithm::kOracle:
      return brute_force_oracle(graph, kDefaultOracleMaxObstacles, deadline);
  }
  throw std::invalid_argument("unknown algorithm");
}

BenchRecord bench_one(const GenConfig& config, Algorithm algorithm,
                      std::chrono::milliseconds timeout) {
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();
  const Deadline deadline = started + timeout;

  BenchRecord record;
  record.seed = config.seed;
  record.n = config.n;
  record.grid = config.grid;
  record.alpha_int = alpha_threshold(config.n).alpha_int;
  record.algorithm = algorithm;

  const Instance instance = gen_random_instance(config);
  const ArrangementGraph graph = build_arrangement(instance);
  const Solution solution = solve(graph, algorithm, std::nullopt, deadline);

  record.timed_out = solution.outcome == Outcome::kTimedOut;
  if (solution.feasible()) record.cardinality = solution.cardinality();
  record.states_generated = solution.stats.states_generated;
  record.states_expanded = solution.stats.states_expanded;
  record.wall_time_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - started).count();
  return record;
}

std::vector<BenchRecord> run_bench(const std::vector<GenConfig>& configs,
                                   Algorithm algorithm,
                                   std::chrono::milliseconds timeout,
                                   int threads) {
  if (timeout.count() <= 0) {
    throw std::invalid_argument("timeout must be positive");
  }
  for (const GenConfig& config : configs) check_config(config);

  std::vector<BenchRecord> records(configs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  const auto worker = [&]() {
    for (std::size_t i = next++; i < configs.size(); i = next++) {
      if (failed) return;
      try {
        records[i] = bench_one(configs[i], algorithm, timeout);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };

  const int workers =
      std::clamp(threads, 1, std::max(1, static_cast<int>(configs.size())));
  std::vector<std::jthread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();  // joins
  if (failure) std::rethrow_exception(failure);

  std::stable_sort(records.begin(), records.end(),
                   [](const BenchRecord& a, const BenchRecord& b) {
                     return a.seed < b.seed;
                   });
  return records;
}

void write_bench_csv(const std::vector<BenchRecord>& records,
                     std::ostream& out) {
  out << kBenchCsvHeader << '\n';
  char wall[32];
  for (const BenchRecord& r : records) {
    std::snprintf(wall, sizeof wall, "%.3f", r.wall_time_ms);
    out << r.seed << ',' << r.n << ',' << r.grid << ',' << r.alpha_int << ','
        << to_string(r.algorithm) << ',';
    if (r.cardinality) out << *r.cardinality;
    out << ',' << (r.timed_out ? 1 : 0) << ',' << wall << ','
        << r.states_generated << ',' << r.states_expanded << '\n';
  }
}

void run_bench(const std::vector<GenConfig>& configs, Algorithm algorithm,
               std::chrono::milliseconds timeout,
               const std::filesystem::path& out_path, int threads) {
  const auto records = run_bench(configs, algorithm, timeout, threads);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path.string());
  write_bench_csv(records, out);
  if (!out) throw std::runtime_error("write failed for " + out_path.string());
}

}  // namespace mcr
