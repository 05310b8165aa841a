#include <numeric>

#include "mcr/solvers.hpp"

namespace mcr {

namespace {

// Advances `combo` (strictly increasing ids in [0, n)) to the next
// combination of the same size in lexicographic order.
bool next_combination(std::vector<ObstacleId>& combo, int n) {
  const int k = static_cast<int>(combo.size());
  int i = k - 1;
  while (i >= 0 && combo[i] == n - k + i) --i;
  if (i < 0) return false;
  ++combo[i];
  for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
  return true;
}

}  // namespace

Solution brute_force_oracle(const ArrangementGraph& graph, int max_n,
                            std::optional<Deadline> deadline) {
  using Clock = std::chrono::steady_clock;
  const int n = graph.obstacle_count();
  if (n > max_n) {
    throw OracleRefused("brute-force oracle refuses n=" + std::to_string(n) +
                        " > max_n=" + std::to_string(max_n));
  }
  const auto started = Clock::now();
  Solution solution;
  solution.algorithm = "oracle";
  solution.outcome = Outcome::kInfeasible;
  solution.removal_set = graph.empty_set();

  const auto finish = [&]() {
    solution.stats.wall_time_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - started)
            .count();
    return solution;
  };

  if (!feasibility(graph, graph.all_obstacles()).feasible) return finish();

  for (int size = 0; size <= n; ++size) {
    std::vector<ObstacleId> combo(size);
    std::iota(combo.begin(), combo.end(), 0);
    do {
      if (deadline && Clock::now() >= *deadline) {
        solution.outcome = Outcome::kTimedOut;
        return finish();
      }
      const ObstacleSet candidate = ObstacleSet::from_ids(n, combo);
      ++solution.stats.states_generated;
      Feasibility check = feasibility(graph, candidate);
      if (check.feasible) {
        solution.outcome = Outcome::kSolved;
        solution.removal_set = candidate;
        solution.witness_path = std::move(check.witness_path);
        return finish();
      }
    } while (next_combination(combo, n));
  }
  return finish();
}

}  // namespace mcr
