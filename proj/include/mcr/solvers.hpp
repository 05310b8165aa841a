#ifndef MCR_SOLVERS_HPP
#define MCR_SOLVERS_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcr/graph.hpp"
#include "mcr/obstacle_set.hpp"

namespace mcr {

enum class Outcome {
  kSolved,
  // An alpha-capped exact search exhausted every state with |R| <= alpha.
  kNoSolutionWithinAlpha,
  // The goal is unreachable even with every obstacle removed.
  kInfeasible,
  kTimedOut,
};

std::string_view to_string(Outcome outcome);

struct SearchStats {
  // States admitted to the open list, the initial state included. Every
  // admitted state is a distinct (vertex, R) pair.
  std::uint64_t states_generated = 0;
  std::uint64_t states_expanded = 0;
  // Successors rejected because a retained state at the same vertex had a
  // subset of their R, plus retained states evicted by a new strict subset.
  std::uint64_t states_pruned_dominated = 0;
  // Successors discarded by the alpha cap, by vertex label or by |R|.
  std::uint64_t states_pruned_alpha = 0;
  double wall_time_ms = 0.0;
};

struct Solution {
  std::string algorithm;
  Outcome outcome = Outcome::kInfeasible;
  ObstacleSet removal_set;
  std::vector<VertexId> witness_path;
  SearchStats stats;

  bool feasible() const { return outcome == Outcome::kSolved; }
  int cardinality() const { return removal_set.size(); }
};

using Deadline = std::chrono::steady_clock::time_point;

struct ExactOptions {
  std::optional<int> alpha;
  // Off: only exact (vertex, R) repeats are dropped. Debug switch used to
  // check that superset pruning never changes the optimum.
  bool domination_pruning = true;
  std::optional<Deadline> deadline;
  // Called for every state taken off the open list, in pop order.
  std::function<void(VertexId, const ObstacleSet&)> on_expand;
  // Called for every successor before pruning: (parent R, vertex, child R).
  std::function<void(const ObstacleSet&, VertexId, const ObstacleSet&)>
      on_generate;
};

// Best-first search over (vertex, R) states in increasing |R|, FIFO among
// ties. Returns the first goal state popped.
Solution exact_mcr(const ArrangementGraph& graph,
                   const ExactOptions& options = {});

inline Solution exact_mcr(const ArrangementGraph& graph, int alpha) {
  ExactOptions options;
  options.alpha = alpha;
  return exact_mcr(graph, options);
}

// One removable set per vertex: the first minimum-cardinality set settled.
// An upper bound on |S*|; exact when no obstacle covers two vertices.
Solution greedy_mcr(const ArrangementGraph& graph,
                    std::optional<Deadline> deadline = std::nullopt);

enum class WeightMode { kIntersection, kUnit };

// Minimum vertex-weight s-g path (start vertex included) with weight |I(v)|
// or 1; the removal set is the union of covers along it.
Solution weighted_bound(const ArrangementGraph& graph, WeightMode mode);

class OracleRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultOracleMaxObstacles = 20;

// Tries obstacle subsets by increasing size, lexicographic within a size,
// and returns the first feasible one. Throws OracleRefused when n > max_n.
Solution brute_force_oracle(const ArrangementGraph& graph,
                            int max_n = kDefaultOracleMaxObstacles,
                            std::optional<Deadline> deadline = std::nullopt);

struct Feasibility {
  bool feasible = false;
  std::vector<VertexId> witness_path;
};

// BFS restricted to vertices whose cover is a subset of `removed`.
Feasibility feasibility(const ArrangementGraph& graph,
                        const ObstacleSet& removed);

// Solution JSON: algorithm, outcome, feasible, cardinality, removal_set,
// witness_path, stats{...}. With include_timing=false the wall time is
// omitted so that outputs compare byte-for-byte.
std::string solution_to_json(const Solution& solution,
                             bool include_timing = true);

}  // namespace mcr

#endif  // MCR_SOLVERS_HPP
