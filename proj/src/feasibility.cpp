#include <algorithm>
#include <deque>

#include "mcr/solvers.hpp"

namespace mcr {

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kSolved: return "solved";
    case Outcome::kNoSolutionWithinAlpha: return "no_solution_within_alpha";
    case Outcome::kInfeasible: return "infeasible";
    case Outcome::kTimedOut: return "timed_out";
  }
  return "unknown";
}

Feasibility feasibility(const ArrangementGraph& graph,
                        const ObstacleSet& removed) {
  Feasibility result;
  const auto allowed = [&](VertexId v) {
    return graph.cover(v).is_subset_of(removed);
  };
  if (!allowed(graph.start()) || !allowed(graph.goal())) return result;

  std::vector<VertexId> parent(graph.vertex_count(), -1);
  std::vector<bool> seen(graph.vertex_count(), false);
  std::deque<VertexId> queue{graph.start()};
  seen[graph.start()] = true;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    if (v == graph.goal()) {
      for (VertexId at = v; at != -1; at = parent[at]) {
        result.witness_path.push_back(at);
      }
      std::reverse(result.witness_path.begin(), result.witness_path.end());
      result.feasible = true;
      return result;
    }
    for (VertexId next : graph.neighbors(v)) {
      if (!seen[next] && allowed(next)) {
        seen[next] = true;
        parent[next] = v;
        queue.push_back(next);
      }
    }
  }
  return result;
}

}  // namespace mcr
