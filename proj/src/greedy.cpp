#include <algorithm>
#include <deque>
#include <limits>

#include "mcr/solvers.hpp"

namespace mcr {

namespace {

using Clock = std::chrono::steady_clock;

Outcome greedy_search(const ArrangementGraph& graph,
                      std::optional<Deadline> deadline, Solution& solution) {
  const int count = graph.vertex_count();
  constexpr int kUnreached = std::numeric_limits<int>::max();

  // Tentative set per vertex; a vertex is pushed again only on a strict
  // improvement, so the first minimum-cardinality set reached is the one
  // that settles it.
  std::vector<ObstacleSet> tentative(count, graph.empty_set());
  std::vector<int> best(count, kUnreached);
  std::vector<VertexId> parent(count, -1);
  std::vector<bool> settled(count, false);
  std::vector<std::deque<VertexId>> buckets(graph.obstacle_count() + 1);

  const VertexId start = graph.start();
  tentative[start] = graph.empty_set() | graph.cover(start);
  best[start] = tentative[start].size();
  buckets[best[start]].push_back(start);
  ++solution.stats.states_generated;

  std::uint64_t pops = 0;
  for (std::size_t key = 0; key < buckets.size(); ++key) {
    while (!buckets[key].empty()) {
      if (deadline && (++pops & 0x3ff) == 0 && Clock::now() >= *deadline) {
        return Outcome::kTimedOut;
      }
      const VertexId v = buckets[key].front();
      buckets[key].pop_front();
      if (settled[v] || best[v] != static_cast<int>(key)) continue;
      settled[v] = true;
      ++solution.stats.states_expanded;
      if (v == graph.goal()) {
        solution.removal_set = tentative[v];
        for (VertexId at = v; at != -1; at = parent[at]) {
          solution.witness_path.push_back(at);
        }
        std::reverse(solution.witness_path.begin(),
                     solution.witness_path.end());
        return Outcome::kSolved;
      }
      for (VertexId next : graph.neighbors(v)) {
        if (settled[next]) continue;
        ObstacleSet removed = tentative[v] | graph.cover(next);
        const int size = removed.size();
        if (size >= best[next]) {
          ++solution.stats.states_pruned_dominated;
          continue;
        }
        tentative[next] = removed;
        best[next] = size;
        parent[next] = v;
        buckets[size].push_back(next);
        ++solution.stats.states_generated;
      }
    }
  }
  return Outcome::kInfeasible;
}

}  // namespace

Solution greedy_mcr(const ArrangementGraph& graph,
                    std::optional<Deadline> deadline) {
  const auto started = Clock::now();
  Solution solution;
  solution.algorithm = "greedy";
  solution.removal_set = graph.empty_set();
  solution.outcome = greedy_search(graph, deadline, solution);
  solution.stats.wall_time_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - started).count();
  return solution;
}

}  // namespace mcr
