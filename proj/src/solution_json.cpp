#include "json.hpp"
#include "mcr/solvers.hpp"

namespace mcr {

std::string solution_to_json(const Solution& solution, bool include_timing) {
  nlohmann::ordered_json doc;
  doc["algorithm"] = solution.algorithm;
  doc["outcome"] = to_string(solution.outcome);
  doc["feasible"] = solution.feasible();
  if (solution.feasible()) {
    doc["cardinality"] = solution.cardinality();
  } else {
    doc["cardinality"] = nullptr;
  }
  doc["removal_set"] = solution.removal_set.to_vector();
  doc["witness_path"] = solution.witness_path;
  nlohmann::ordered_json stats;
  stats["states_generated"] = solution.stats.states_generated;
  stats["states_expanded"] = solution.stats.states_expanded;
  stats["states_pruned_dominated"] = solution.stats.states_pruned_dominated;
  stats["states_pruned_alpha"] = solution.stats.states_pruned_alpha;
  if (include_timing) stats["wall_time_ms"] = solution.stats.wall_time_ms;
  doc["stats"] = std::move(stats);
  return doc.dump() + "\n";
}

}  // namespace mcr
