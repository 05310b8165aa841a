#ifndef MCR_BENCH_HPP
#define MCR_BENCH_HPP

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcr/instance.hpp"
#include "mcr/solvers.hpp"

namespace mcr {

// Portable integer sampling on top of std::mt19937_64, whose output sequence
// is fixed by the C++ standard. Bounded draws use rejection on the raw 64-bit
// output (reject r < 2^64 mod range, then r mod range), so instances
// reproduce on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [lo, hi].
  int uniform(int lo, int hi);

 private:
  std::mt19937_64 engine_;
};

struct GenConfig {
  int grid = 30;
  int n = 100;
  std::uint64_t seed = 0;
  int len_min = 1;
  int len_max = 7;
  int breadth_min = 1;
  int breadth_max = 7;
  // Resample each rectangle until its interior misses all earlier ones.
  bool disjoint = false;

  // Side ranges default to [1, max(1, grid / 4)].
  static GenConfig with_defaults(int grid, int n, std::uint64_t seed);
};

// Throws std::invalid_argument naming the first bad field.
void check_config(const GenConfig& config);

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;  // message starts RETRY_EXHAUSTED
};

inline constexpr int kMaxGenerationRetries = 10000;

// Draw order per seed: for each obstacle i = 0..n-1 the anchor x, anchor y,
// length, breadth; then the start cell x, y; then goal cell x, y, redrawn
// until it differs from the start. Anchors lie on {0..grid-1}^2 and each
// rectangle [ax, ax+length] x [ay, ay+breadth] is clipped to the grid.
Instance gen_random_instance(const GenConfig& config);

enum class Algorithm { kExact, kGreedy, kWeighted, kUnitWeighted, kOracle };

std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);

// Dispatches to the named engine. `alpha` is honored by the exact engine
// only.
Solution solve(const ArrangementGraph& graph, Algorithm algorithm,
               std::optional<int> alpha = std::nullopt,
               std::optional<Deadline> deadline = std::nullopt);

struct BenchRecord {
  std::uint64_t seed = 0;
  int n = 0;
  int grid = 0;
  int alpha_int = 0;
  Algorithm algorithm = Algorithm::kExact;
  std::optional<int> cardinality;  // absent when timed out
  bool timed_out = false;
  double wall_time_ms = 0.0;
  std::uint64_t states_generated = 0;
  std::uint64_t states_expanded = 0;
};

inline constexpr std::string_view kBenchCsvHeader =
    "seed,n,grid,alpha_int,algorithm,cardinality,timed_out,wall_time_ms,"
    "states_generated,states_expanded";

// Generate, build and solve one instance; the timeout covers the whole
// pipeline.
BenchRecord bench_one(const GenConfig& config, Algorithm algorithm,
                      std::chrono::milliseconds timeout);

// One record per config, sorted by seed. Up to `threads` instances are
// solved at once; every non-timing field is independent of the schedule.
std::vector<BenchRecord> run_bench(const std::vector<GenConfig>& configs,
                                   Algorithm algorithm,
                                   std::chrono::milliseconds timeout,
                                   int threads = 1);

void write_bench_csv(const std::vector<BenchRecord>& records,
                     std::ostream& out);

void run_bench(const std::vector<GenConfig>& configs, Algorithm algorithm,
               std::chrono::milliseconds timeout,
               const std::filesystem::path& out_path, int threads = 1);

}  // namespace mcr

#endif  // MCR_BENCH_HPP
