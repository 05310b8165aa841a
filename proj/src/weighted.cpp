#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <tuple>

#include "mcr/solvers.hpp"

namespace mcr {

Solution weighted_bound(const ArrangementGraph& graph, WeightMode mode) {
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();
  const int count = graph.vertex_count();
  constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max();

  const auto weight = [&](VertexId v) -> std::int64_t {
    return mode == WeightMode::kUnit ? 1 : graph.cover(v).size();
  };

  Solution solution;
  solution.algorithm =
      mode == WeightMode::kUnit ? "unit-weighted" : "weighted";
  solution.outcome = Outcome::kInfeasible;
  solution.removal_set = graph.empty_set();

  std::vector<std::int64_t> distance(count, kInfinity);
  std::vector<VertexId> parent(count, -1);
  using Entry = std::pair<std::int64_t, VertexId>;
  // Ties broken by smaller vertex id.
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;

  distance[graph.start()] = weight(graph.start());
  queue.emplace(distance[graph.start()], graph.start());
  ++solution.stats.states_generated;
  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (d != distance[v]) continue;
    ++solution.stats.states_expanded;
    if (v == graph.goal()) {
      solution.outcome = Outcome::kSolved;
      for (VertexId at = v; at != -1; at = parent[at]) {
        solution.witness_path.push_back(at);
        solution.removal_set |= graph.cover(at);
      }
      std::reverse(solution.witness_path.begin(), solution.witness_path.end());
      break;
    }
    for (VertexId next : graph.neighbors(v)) {
      const std::int64_t candidate = d + weight(next);
      if (candidate < distance[next]) {
        distance[next] = candidate;
        parent[next] = v;
        queue.emplace(candidate, next);
        ++solution.stats.states_generated;
      }
    }
  }
  solution.stats.wall_time_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - started).count();
  return solution;
}

}  // namespace mcr
