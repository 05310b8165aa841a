#include <algorithm>
#include <deque>
#include <unordered_set>

#include "mcr/solvers.hpp"

namespace mcr {

namespace {

using Clock = std::chrono::steady_clock;

struct State {
  VertexId vertex;
  int parent;  // index into the state arena, -1 for the initial state
  int cardinality;
  bool evicted = false;
  ObstacleSet removed;
};

class ExactSearch {
 public:
  ExactSearch(const ArrangementGraph& graph, const ExactOptions& options)
      : graph_(graph),
        options_(options),
        buckets_(graph.obstacle_count() + 1),
        antichain_(graph.vertex_count()),
        seen_(options.domination_pruning ? 0 : graph.vertex_count()) {}

  Solution run() {
    const auto started = Clock::now();
    Solution solution;
    solution.algorithm = "exact";
    solution.removal_set = graph_.empty_set();
    solution.outcome = search(solution);
    solution.stats = stats_;
    solution.stats.wall_time_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - started)
            .count();
    return solution;
  }

 private:
  Outcome search(Solution& solution) {
    const VertexId start = graph_.start();
    if (!within_alpha(graph_.cover(start).size())) {
      ++stats_.states_pruned_alpha;
      return exhausted();
    }
    admit(start, -1, graph_.empty_set() | graph_.cover(start));

    std::uint64_t pops = 0;
    for (std::size_t key = 0; key < buckets_.size(); ++key) {
      auto& bucket = buckets_[key];
      while (!bucket.empty()) {
        if (options_.deadline && (++pops & 0x3ff) == 0 &&
            Clock::now() >= *options_.deadline) {
          return Outcome::kTimedOut;
        }
        const int index = bucket.front();
        bucket.pop_front();
        if (states_[index].evicted) continue;
        ++stats_.states_expanded;
        // Copy: admit() may grow the arena and invalidate references.
        const State state = states_[index];
        if (options_.on_expand) options_.on_expand(state.vertex, state.removed);
        if (state.vertex == graph_.goal()) {
          solution.removal_set = state.removed;
          solution.witness_path = path_to(index);
          return Outcome::kSolved;
        }
        expand(state, index);
      }
    }
    return exhausted();
  }

  // Queue drained: distinguish the alpha cap from a disconnected goal.
  Outcome exhausted() const {
    if (options_.alpha && feasibility(graph_, graph_.all_obstacles()).feasible) {
      return Outcome::kNoSolutionWithinAlpha;
    }
    return Outcome::kInfeasible;
  }

  void expand(const State& state, int index) {
    for (VertexId next : graph_.neighbors(state.vertex)) {
      const ObstacleSet& cover = graph_.cover(next);
      if (!within_alpha(cover.size())) {
        ++stats_.states_pruned_alpha;
        continue;
      }
      ObstacleSet removed = state.removed | cover;
      if (options_.on_generate) {
        options_.on_generate(state.removed, next, removed);
      }
      if (!within_alpha(removed.size())) {
        ++stats_.states_pruned_alpha;
        continue;
      }
      if (options_.domination_pruning) {
        if (dominated(next, removed)) {
          ++stats_.states_pruned_dominated;
          continue;
        }
        evict_supersets(next, removed);
      } else if (seen_[next].contains(removed)) {
        continue;
      }
      admit(next, index, removed);
    }
  }

  bool within_alpha(int cardinality) const {
    return !options_.alpha || cardinality <= *options_.alpha;
  }

  bool dominated(VertexId vertex, const ObstacleSet& removed) const {
    for (int other : antichain_[vertex]) {
      if (states_[other].removed.is_subset_of(removed)) return true;
    }
    return false;
  }

  // Keys never decrease, so a strict superset of a new set is still waiting
  // on the open list and can be dropped before it is expanded.
  void evict_supersets(VertexId vertex, const ObstacleSet& removed) {
    auto& retained = antichain_[vertex];
    std::erase_if(retained, [&](int other) {
      if (!removed.is_subset_of(states_[other].removed)) return false;
      states_[other].evicted = true;
      ++stats_.states_pruned_dominated;
      return true;
    });
  }

  void admit(VertexId vertex, int parent, const ObstacleSet& removed) {
    const int index = static_cast<int>(states_.size());
    const int cardinality = removed.size();
    states_.push_back({vertex, parent, cardinality, false, removed});
    buckets_[cardinality].push_back(index);
    if (options_.domination_pruning) {
      antichain_[vertex].push_back(index);
    } else {
      seen_[vertex].insert(removed);
    }
    ++stats_.states_generated;
  }

  std::vector<VertexId> path_to(int index) const {
    std::vector<VertexId> path;
    for (int at = index; at != -1; at = states_[at].parent) {
      path.push_back(states_[at].vertex);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  const ArrangementGraph& graph_;
  const ExactOptions& options_;
  std::vector<State> states_;
  std::vector<std::deque<int>> buckets_;
  std::vector<std::vector<int>> antichain_;
  std::vector<std::unordered_set<ObstacleSet>> seen_;
  SearchStats stats_;
};

}  // namespace

Solution exact_mcr(const ArrangementGraph& graph, const ExactOptions& options) {
  if (options.alpha && *options.alpha < 0) {
    throw std::invalid_argument("alpha must be non-negative");
  }
  return ExactSearch(graph, options).run();
}

}  // namespace mcr
