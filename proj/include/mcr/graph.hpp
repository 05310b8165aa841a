#ifndef MCR_GRAPH_HPP
#define MCR_GRAPH_HPP

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcr/obstacle_set.hpp"

namespace mcr {

using VertexId = int;

enum class GraphErrorCode {
  kParse,
  kAsymmetricEdge,
  kDuplicateEdge,
  kSelfLoop,
  kVertexOutOfRange,
  kObstacleOutOfRange,
  kCapacityExceeded,
};

std::string_view to_string(GraphErrorCode code);

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}
  GraphErrorCode code() const { return code_; }

 private:
  GraphErrorCode code_;
};

// Vertex-labeled undirected graph: each vertex carries the set of obstacles
// covering it. Immutable once constructed; neighbor lists are sorted.
class ArrangementGraph {
 public:
  // Builds symmetric adjacency from an undirected edge list. A pair listed
  // twice (in either orientation) is kept once.
  ArrangementGraph(int obstacle_count, std::vector<ObstacleSet> covers,
                   const std::vector<std::pair<VertexId, VertexId>>& edges,
                   VertexId start, VertexId goal);

  // Takes adjacency lists as given and rejects them unless they are
  // symmetric, loop-free and duplicate-free.
  static ArrangementGraph from_adjacency(
      int obstacle_count, std::vector<ObstacleSet> covers,
      std::vector<std::vector<VertexId>> adjacency, VertexId start,
      VertexId goal);

  int vertex_count() const { return static_cast<int>(covers_.size()); }
  int obstacle_count() const { return obstacle_count_; }
  int edge_count() const { return edge_count_; }
  VertexId start() const { return start_; }
  VertexId goal() const { return goal_; }

  const ObstacleSet& cover(VertexId v) const { return covers_[v]; }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }

  // Each undirected edge once, as (u, v) with u < v, sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  // A set over this graph's obstacle universe.
  ObstacleSet empty_set() const { return ObstacleSet(obstacle_count_); }
  ObstacleSet all_obstacles() const;

  friend bool operator==(const ArrangementGraph&,
                         const ArrangementGraph&) = default;

 private:
  ArrangementGraph() = default;
  void check_labels() const;

  int obstacle_count_ = 0;
  std::vector<ObstacleSet> covers_;
  std::vector<std::vector<VertexId>> adjacency_;
  int edge_count_ = 0;
  VertexId start_ = 0;
  VertexId goal_ = 0;
};

struct GraphStats {
  int n = 0;                 // obstacles
  int N = 0;                 // vertices (faces)
  int edge_count = 0;
  int max_intersection = 0;  // max_v |I(v)|
  int multiplicity = 0;      // p: max over obstacles of #vertices covering it
};

GraphStats stats(const ArrangementGraph& graph);

ArrangementGraph parse_graph(std::string_view text);
std::string dump_graph(const ArrangementGraph& graph);

ArrangementGraph read_graph(const std::filesystem::path& path);
void write_graph(const ArrangementGraph& graph,
                 const std::filesystem::path& path);

}  // namespace mcr

#endif  // MCR_GRAPH_HPP
