#include "mcr/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcr/arrangement.hpp"
#include "mcr/bench.hpp"
#include "mcr/graph.hpp"
#include "mcr/instance.hpp"
#include "mcr/solvers.hpp"

namespace mcr {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SideFlags {
  std::optional<int> len_min, len_max, breadth_min, breadth_max;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--len-min", len_min, "Minimum rectangle length (x)");
    cmd.add_option("--len-max", len_max, "Maximum rectangle length (x)");
    cmd.add_option("--breadth-min", breadth_min, "Minimum rectangle breadth (y)");
    cmd.add_option("--breadth-max", breadth_max, "Maximum rectangle breadth (y)");
  }

  GenConfig config(int grid, int n, std::uint64_t seed, bool disjoint) const {
    GenConfig c = GenConfig::with_defaults(grid, n, seed);
    if (len_min) c.len_min = *len_min;
    if (len_max) c.len_max = *len_max;
    if (breadth_min) c.breadth_min = *breadth_min;
    if (breadth_max) c.breadth_max = *breadth_max;
    c.disjoint = disjoint;
    return c;
  }
};

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--seeds expects A..B");
  const auto parse = [&](std::string_view part) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw UsageError("--seeds: bad bound '" + std::string(part) + "'");
    }
    return value;
  };
  const std::string_view view(text);
  const auto first = parse(view.substr(0, dots));
  const auto last = parse(view.substr(dots + 2));
  if (first > last) {
    throw UsageError("--seeds: empty range " + text);
  }
  return {first, last};
}

int thread_budget() {
  if (const char* env = std::getenv("MCR_THREADS")) {
    const int value = std::atoi(env);
    if (value >= 1) return value;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Minimum constraint removal solver", "mcr"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random rectangle instance");
  int gen_grid = 30;
  int gen_n = 100;
  std::uint64_t gen_seed = 0;
  bool gen_disjoint = false;
  std::string gen_out;
  SideFlags gen_sides;
  gen->add_option("--grid", gen_grid, "Workspace side length")->capture_default_str();
  gen->add_option("--n", gen_n, "Obstacle count")->capture_default_str();
  gen->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
  gen_sides.add_to(*gen);
  gen->add_flag("--disjoint", gen_disjoint, "Forbid overlapping rectangles");
  gen->add_option("--out", gen_out, "Output file (default: standard output)");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance or graph file");
  std::string solve_in;
  std::string solve_algorithm = "exact";
  std::optional<int> solve_alpha;
  bool graph_input = false;
  bool no_timing = false;
  solve_cmd->add_option("--in", solve_in, "Instance or graph file")->required();
  solve_cmd->add_option("--algorithm", solve_algorithm,
                        "exact|greedy|weighted|unit-weighted|oracle")
      ->capture_default_str();
  solve_cmd->add_option("--alpha", solve_alpha, "Cardinality cap (exact only)");
  solve_cmd->add_flag("--graph-input", graph_input,
                      "Read a graph file instead of a geometric instance");
  solve_cmd->add_flag("--no-timing", no_timing,
                      "Omit stats.wall_time_ms from the output");

  // bench
  auto* bench = app.add_subcommand("bench", "Run the runtime-vs-|S*| experiment");
  int bench_grid = 30;
  int bench_n = 100;
  std::string bench_seeds = "0..49";
  std::string bench_algorithm = "exact";
  long long timeout_ms = 60000;
  bool bench_disjoint = false;
  std::string bench_out;
  SideFlags bench_sides;
  bench->add_option("--grid", bench_grid)->capture_default_str();
  bench->add_option("--n", bench_n)->capture_default_str();
  bench->add_option("--seeds", bench_seeds, "Inclusive seed range A..B")
      ->capture_default_str();
  bench->add_option("--algorithm", bench_algorithm)->capture_default_str();
  bench->add_option("--timeout-ms", timeout_ms, "Per-instance wall-clock limit")
      ->capture_default_str();
  bench_sides.add_to(*bench);
  bench->add_flag("--disjoint", bench_disjoint);
  bench->add_option("--out", bench_out, "CSV file (default: standard output)");

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "Print graph statistics");
  std::string stats_in;
  bool stats_graph_input = false;
  stats_cmd->add_option("--in", stats_in)->required();
  stats_cmd->add_flag("--graph-input", stats_graph_input);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "mcr: " << e.what() << "\n";
    return kExitBadInput;
  }

  const auto load_graph = [](const std::string& path, bool is_graph) {
    return is_graph ? read_graph(path) : build_arrangement(read_instance(path));
  };

  try {
    if (*gen) {
      const GenConfig config =
          gen_sides.config(gen_grid, gen_n, gen_seed, gen_disjoint);
      try {
        check_config(config);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const Instance instance = gen_random_instance(config);
      if (gen_out.empty()) {
        out << dump_instance(instance);
      } else {
        write_instance(instance, gen_out);
      }
      return kExitOk;
    }

    if (*solve_cmd) {
      const auto algorithm = parse_algorithm(solve_algorithm);
      if (!algorithm) throw UsageError("unknown algorithm " + solve_algorithm);
      if (solve_alpha && *solve_alpha < 0) throw UsageError("--alpha must be >= 0");
      if (solve_alpha && *algorithm != Algorithm::kExact) {
        throw UsageError("--alpha applies to the exact algorithm only");
      }
      const ArrangementGraph graph = load_graph(solve_in, graph_input);
      const Solution solution = solve(graph, *algorithm, solve_alpha);
      out << solution_to_json(solution, !no_timing);
      if (solution.outcome == Outcome::kNoSolutionWithinAlpha) {
        err << "mcr: no solution within alpha=" << *solve_alpha << "\n";
        return kExitNoSolution;
      }
      if (solution.outcome == Outcome::kInfeasible) {
        err << "mcr: goal unreachable even with every obstacle removed\n";
        return kExitNoSolution;
      }
      return kExitOk;
    }

    if (*bench) {
      const auto algorithm = parse_algorithm(bench_algorithm);
      if (!algorithm) throw UsageError("unknown algorithm " + bench_algorithm);
      if (timeout_ms <= 0) throw UsageError("--timeout-ms must be positive");
      const auto [first, last] = parse_seed_range(bench_seeds);
      std::vector<GenConfig> configs;
      for (std::uint64_t seed = first;; ++seed) {
        configs.push_back(
            bench_sides.config(bench_grid, bench_n, seed, bench_disjoint));
        try {
          check_config(configs.back());
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        if (seed == last) break;
      }
      if (*algorithm == Algorithm::kOracle &&
          bench_n > kDefaultOracleMaxObstacles) {
        throw UsageError("oracle refuses n > " +
                         std::to_string(kDefaultOracleMaxObstacles));
      }
      const auto records =
          run_bench(configs, *algorithm, std::chrono::milliseconds(timeout_ms),
                    thread_budget());
      if (bench_out.empty()) {
        write_bench_csv(records, out);
      } else {
        std::ofstream file(bench_out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + bench_out);
        write_bench_csv(records, file);
      }
      return kExitOk;
    }

    if (*stats_cmd) {
      const GraphStats s = stats(load_graph(stats_in, stats_graph_input));
      nlohmann::ordered_json doc;
      doc["n"] = s.n;
      doc["N"] = s.N;
      doc["edges"] = s.edge_count;
      doc["max_intersection"] = s.max_intersection;
      doc["p"] = s.multiplicity;
      out << doc.dump() << "\n";
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "mcr: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const ParseError& e) {
    err << "mcr: parse error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const InvalidInstance& e) {
    err << "mcr: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const GraphError& e) {
    err << "mcr: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const OracleRefused& e) {
    err << "mcr: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "mcr: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace mcr
