#include "mcr/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mcr {

using nlohmann::ordered_json;

std::string_view to_string(GraphErrorCode code) {
  switch (code) {
    case GraphErrorCode::kParse: return "PARSE_ERROR";
    case GraphErrorCode::kAsymmetricEdge: return "ASYMMETRIC_EDGE";
    case GraphErrorCode::kDuplicateEdge: return "DUPLICATE_EDGE";
    case GraphErrorCode::kSelfLoop: return "SELF_LOOP";
    case GraphErrorCode::kVertexOutOfRange: return "VERTEX_OUT_OF_RANGE";
    case GraphErrorCode::kObstacleOutOfRange: return "OBSTACLE_OUT_OF_RANGE";
    case GraphErrorCode::kCapacityExceeded: return "CAPACITY_EXCEEDED";
  }
  return "UNKNOWN";
}

namespace {

void check_vertex(VertexId v, int vertex_count, const std::string& what) {
  if (v < 0 || v >= vertex_count) {
    throw GraphError(GraphErrorCode::kVertexOutOfRange,
                     what + " " + std::to_string(v) + " not in [0, " +
                         std::to_string(vertex_count) + ")");
  }
}

}  // namespace

void ArrangementGraph::check_labels() const {
  if (obstacle_count_ < 0 ||
      static_cast<std::size_t>(obstacle_count_) > ObstacleSet::kCapacity) {
    throw GraphError(GraphErrorCode::kCapacityExceeded,
                     "obstacle count " + std::to_string(obstacle_count_));
  }
  if (covers_.empty()) {
    throw GraphError(GraphErrorCode::kVertexOutOfRange, "graph has no vertices");
  }
  const ObstacleSet universe = all_obstacles();
  for (std::size_t v = 0; v < covers_.size(); ++v) {
    if (!covers_[v].is_subset_of(universe)) {
      throw GraphError(GraphErrorCode::kObstacleOutOfRange,
                       "vertex " + std::to_string(v) +
                           " covers an obstacle id >= n=" +
                           std::to_string(obstacle_count_));
    }
  }
  check_vertex(start_, vertex_count(), "start");
  check_vertex(goal_, vertex_count(), "goal");
}

ArrangementGraph::ArrangementGraph(
    int obstacle_count, std::vector<ObstacleSet> covers,
    const std::vector<std::pair<VertexId, VertexId>>& edges, VertexId start,
    VertexId goal)
    : obstacle_count_(obstacle_count),
      covers_(std::move(covers)),
      adjacency_(covers_.size()),
      start_(start),
      goal_(goal) {
  check_labels();
  for (auto [u, v] : edges) {
    check_vertex(u, vertex_count(), "edge endpoint");
    check_vertex(v, vertex_count(), "edge endpoint");
    if (u == v) {
      throw GraphError(GraphErrorCode::kSelfLoop,
                       "edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ")");
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += static_cast<int>(list.size());
  }
  edge_count_ /= 2;
}

ArrangementGraph ArrangementGraph::from_adjacency(
    int obstacle_count, std::vector<ObstacleSet> covers,
    std::vector<std::vector<VertexId>> adjacency, VertexId start,
    VertexId goal) {
  ArrangementGraph graph;
  graph.obstacle_count_ = obstacle_count;
  graph.covers_ = std::move(covers);
  graph.start_ = start;
  graph.goal_ = goal;
  graph.check_labels();
  if (adjacency.size() != graph.covers_.size()) {
    throw GraphError(GraphErrorCode::kVertexOutOfRange,
                     "adjacency has " + std::to_string(adjacency.size()) +
                         " lists for " + std::to_string(graph.covers_.size()) +
                         " vertices");
  }
  const int count = graph.vertex_count();
  for (int u = 0; u < count; ++u) {
    auto& list = adjacency[u];
    for (VertexId v : list) {
      check_vertex(v, count, "neighbor of " + std::to_string(u));
      if (v == u) {
        throw GraphError(GraphErrorCode::kSelfLoop,
                         "vertex " + std::to_string(u));
      }
    }
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw GraphError(GraphErrorCode::kDuplicateEdge,
                       "repeated neighbor in list of vertex " +
                           std::to_string(u));
    }
  }
  int directed = 0;
  for (int u = 0; u < count; ++u) {
    for (VertexId v : adjacency[u]) {
      if (!std::binary_search(adjacency[v].begin(), adjacency[v].end(), u)) {
        throw GraphError(GraphErrorCode::kAsymmetricEdge,
                         "(" + std::to_string(u) + "," + std::to_string(v) +
                             ") present but (" + std::to_string(v) + "," +
                             std::to_string(u) + ") missing");
      }
      ++directed;
    }
  }
  graph.adjacency_ = std::move(adjacency);
  graph.edge_count_ = directed / 2;
  return graph;
}

std::vector<std::pair<VertexId, VertexId>> ArrangementGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> result;
  result.reserve(edge_count_);
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

ObstacleSet ArrangementGraph::all_obstacles() const {
  ObstacleSet set(obstacle_count_);
  for (ObstacleId id = 0; id < obstacle_count_; ++id) set.insert(id);
  return set;
}

GraphStats stats(const ArrangementGraph& graph) {
  GraphStats s;
  s.n = graph.obstacle_count();
  s.N = graph.vertex_count();
  s.edge_count = graph.edge_count();
  std::vector<int> occurrences(graph.obstacle_count(), 0);
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    const auto ids = graph.cover(v).to_vector();
    s.max_intersection =
        std::max(s.max_intersection, static_cast<int>(ids.size()));
    for (ObstacleId id : ids) ++occurrences[id];
  }
  for (int count : occurrences) s.multiplicity = std::max(s.multiplicity, count);
  return s;
}

namespace {

[[noreturn]] void parse_fail(const std::string& message) {
  throw GraphError(GraphErrorCode::kParse, message);
}

int integer_at(const ordered_json& object, const char* name) {
  auto it = object.find(name);
  if (it == object.end()) parse_fail(std::string("missing field '") + name + "'");
  if (!it->is_number_integer()) {
    parse_fail(std::string("field '") + name + "': expected an integer");
  }
  return it->get<int>();
}

}  // namespace

ArrangementGraph parse_graph(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(e.what());
  }
  if (!doc.is_object()) parse_fail("graph file must hold a JSON object");

  const int n = integer_at(doc, "n");
  if (n < 0 || static_cast<std::size_t>(n) > ObstacleSet::kCapacity) {
    throw GraphError(GraphErrorCode::kCapacityExceeded,
                     "n=" + std::to_string(n));
  }
  auto vertices = doc.find("vertices");
  if (vertices == doc.end() || !vertices->is_array()) {
    parse_fail("field 'vertices': expected an array");
  }
  const int count = static_cast<int>(vertices->size());
  std::vector<ObstacleSet> covers(count);
  std::vector<bool> assigned(count, false);
  for (int i = 0; i < count; ++i) {
    const ordered_json& vertex = (*vertices)[i];
    if (!vertex.is_object()) parse_fail("vertices[" + std::to_string(i) + "]: expected an object");
    const int id = integer_at(vertex, "id");
    check_vertex(id, count, "vertices[" + std::to_string(i) + "].id");
    if (assigned[id]) parse_fail("vertex id " + std::to_string(id) + " repeated");
    assigned[id] = true;
    auto cover = vertex.find("cover");
    if (cover == vertex.end() || !cover->is_array()) {
      parse_fail("vertices[" + std::to_string(i) + "].cover: expected an array");
    }
    ObstacleSet set(n);
    for (const auto& obstacle : *cover) {
      if (!obstacle.is_number_integer()) {
        parse_fail("vertices[" + std::to_string(i) + "].cover: expected integers");
      }
      const int o = obstacle.get<int>();
      if (o < 0 || o >= n) {
        throw GraphError(GraphErrorCode::kObstacleOutOfRange,
                         "vertex " + std::to_string(id) + " covers obstacle " +
                             std::to_string(o) + " but n=" + std::to_string(n));
      }
      set.insert(o);
    }
    covers[id] = set;
  }

  auto edges_json = doc.find("edges");
  if (edges_json == doc.end() || !edges_json->is_array()) {
    parse_fail("field 'edges': expected an array");
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = 0; i < edges_json->size(); ++i) {
    const ordered_json& e = (*edges_json)[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      parse_fail("edges[" + std::to_string(i) + "]: expected [u, v]");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return ArrangementGraph(n, std::move(covers), edges, integer_at(doc, "start"),
                          integer_at(doc, "goal"));
}

std::string dump_graph(const ArrangementGraph& graph) {
  // Hand-formatted so each vertex and edge sits on its own line.
  std::ostringstream out;
  out << "{\n \"n\": " << graph.obstacle_count() << ",\n \"start\": "
      << graph.start() << ",\n \"goal\": " << graph.goal()
      << ",\n \"vertices\": [";
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    out << (v == 0 ? "\n" : ",\n") << "  {\"id\": " << v << ", \"cover\": [";
    const auto ids = graph.cover(v).to_vector();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      out << (i == 0 ? "" : ", ") << ids[i];
    }
    out << "]}";
  }
  out << "\n ],\n \"edges\": [";
  const auto edges = graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out << (i == 0 ? "\n" : ",\n") << "  [" << edges[i].first << ", "
        << edges[i].second << "]";
  }
  out << (edges.empty() ? "]\n}\n" : "\n ]\n}\n");
  return out.str();
}

ArrangementGraph read_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GraphError(GraphErrorCode::kParse, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

void write_graph(const ArrangementGraph& graph,
                 const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << dump_graph(graph);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace mcr
