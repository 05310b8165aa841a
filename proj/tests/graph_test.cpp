#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

#include "gtest/gtest.h"
#include "mcr/arrangement.hpp"
#include "mcr/graph.hpp"
#include "test_util.hpp"

namespace mcr {
namespace {

using testing::corpus;
using testing::ids;

TEST(ReadGraph, TranscribedFourObstacleGraphLoads) {
  const ArrangementGraph graph = read_graph(corpus("pocket.graph.json"));
  EXPECT_EQ(graph.vertex_count(), 14);
  EXPECT_EQ(graph.obstacle_count(), 4);
  // 28 printed edges, one of them drawn twice.
  EXPECT_EQ(graph.edge_count(), 27);
  EXPECT_EQ(graph.start(), 0);
  EXPECT_EQ(graph.goal(), 13);
  EXPECT_EQ(graph.cover(3), ids(4, {1, 3}));
}

TEST(ReadGraph, SingleVertexStartIsGoal) {
  const ArrangementGraph graph = parse_graph(
      R"({"n": 0, "vertices": [{"id": 0, "cover": []}], "edges": [],
          "start": 0, "goal": 0})");
  EXPECT_EQ(graph.vertex_count(), 1);
  EXPECT_EQ(graph.start(), graph.goal());
}

GraphErrorCode error_of(const std::function<void()>& action) {
  try {
    action();
  } catch (const GraphError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no GraphError thrown";
  return GraphErrorCode::kParse;
}

TEST(ReadGraph, Errors) {
  EXPECT_EQ(error_of([] { parse_graph("{ not json"); }), GraphErrorCode::kParse);
  EXPECT_EQ(error_of([] {
              parse_graph(R"({"n": 1, "vertices": [{"id": 0, "cover": [1]}],
                              "edges": [], "start": 0, "goal": 0})");
            }),
            GraphErrorCode::kObstacleOutOfRange);
  EXPECT_EQ(error_of([] {
              parse_graph(R"({"n": 0, "vertices": [{"id": 0, "cover": []}],
                              "edges": [[0, 3]], "start": 0, "goal": 0})");
            }),
            GraphErrorCode::kVertexOutOfRange);
  EXPECT_EQ(error_of([] {
              parse_graph(R"({"n": 0, "vertices": [{"id": 0, "cover": []}],
                              "edges": [[0, 0]], "start": 0, "goal": 0})");
            }),
            GraphErrorCode::kSelfLoop);
  EXPECT_EQ(error_of([] {
              parse_graph(R"({"n": 0, "vertices": [{"id": 0, "cover": []}],
                              "edges": [], "start": 0, "goal": 4})");
            }),
            GraphErrorCode::kVertexOutOfRange);
  EXPECT_EQ(error_of([] {
              parse_graph(R"({"n": 0, "vertices": [{"id": 0, "cover": []}],
                              "edges": [], "start": 0})");
            }),
            GraphErrorCode::kParse);
}

TEST(FromAdjacency, MissingReverseEdgeIsAsymmetric) {
  std::vector<ObstacleSet> covers(3, ObstacleSet(1));
  EXPECT_EQ(error_of([&] {
              ArrangementGraph::from_adjacency(1, covers, {{1}, {0, 2}, {}}, 0, 2);
            }),
            GraphErrorCode::kAsymmetricEdge);
  EXPECT_EQ(error_of([&] {
              ArrangementGraph::from_adjacency(1, covers, {{1, 1}, {0}, {}}, 0, 2);
            }),
            GraphErrorCode::kDuplicateEdge);
  const auto graph =
      ArrangementGraph::from_adjacency(1, covers, {{1}, {2, 0}, {1}}, 0, 2);
  EXPECT_EQ(graph.edge_count(), 2);
  EXPECT_EQ(graph, ArrangementGraph(1, covers, {{0, 1}, {1, 2}}, 0, 2));
}

TEST(GraphStats, TranscribedFourObstacleGraph) {
  const GraphStats s = stats(read_graph(corpus("pocket.graph.json")));
  EXPECT_EQ(s.n, 4);
  EXPECT_EQ(s.N, 14);
  EXPECT_EQ(s.edge_count, 27);
  EXPECT_EQ(s.max_intersection, 2);
  // Obstacle 0 labels five vertices: {0} three times, {0,1} and {0,2}.
  EXPECT_EQ(s.multiplicity, 5);
}

TEST(GraphStats, ObstacleFreeReportsZeroMultiplicity) {
  const ArrangementGraph graph(3, std::vector<ObstacleSet>(4, ObstacleSet(3)),
                               {{0, 1}, {1, 2}, {2, 3}}, 0, 3);
  const GraphStats s = stats(graph);
  EXPECT_EQ(s.multiplicity, 0);
  EXPECT_EQ(s.max_intersection, 0);
}

TEST(GraphStats, Wall) {
  const GraphStats s = stats(read_graph(corpus("weighted_trap.graph.json")));
  EXPECT_EQ(s.multiplicity, 4);  // obstacle 2 labels four vertices
  Instance wall;
  wall.width = wall.height = 10;
  wall.obstacles = {{0, 3, 0, 5, 10}};
  wall.start = HalfPoint::cell_center(1, 1);
  wall.goal = HalfPoint::cell_center(8, 1);
  const GraphStats w = stats(build_arrangement(wall));
  EXPECT_EQ(w.n, 1);
  EXPECT_EQ(w.N, 3);
  EXPECT_EQ(w.multiplicity, 1);
}

TEST(GraphProperties, StatsIgnoreEdgeOrder) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const ArrangementGraph g = testing::random_graph(rng, 12, 6, 0.3, 3);
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    for (auto& e : edges) {
      if (rng() & 1) std::swap(e.first, e.second);
    }
    std::vector<ObstacleSet> covers;
    for (VertexId v = 0; v < g.vertex_count(); ++v) covers.push_back(g.cover(v));
    const ArrangementGraph shuffled(g.obstacle_count(), covers, edges,
                                    g.start(), g.goal());
    EXPECT_EQ(shuffled, g);
    const GraphStats a = stats(g), b = stats(shuffled);
    EXPECT_EQ(a.edge_count, b.edge_count);
    EXPECT_EQ(a.multiplicity, b.multiplicity);
    EXPECT_EQ(a.max_intersection, b.max_intersection);
  }
}

TEST(GraphProperties, WriteReadRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "mcr_graph_test";
  std::filesystem::create_directories(dir);
  std::mt19937 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const ArrangementGraph g = testing::random_graph(rng, 1 + trial, 9, 0.25, 4);
    const auto path = dir / "g.json";
    write_graph(g, path);
    EXPECT_EQ(read_graph(path), g);
  }
  const ArrangementGraph pocket = read_graph(corpus("pocket.graph.json"));
  EXPECT_EQ(parse_graph(dump_graph(pocket)), pocket);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace mcr
