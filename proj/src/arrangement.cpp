#include "mcr/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace mcr {

CoordinateCuts compress_coordinates(const Instance& instance) {
  CoordinateCuts cuts;
  cuts.x = {0, instance.width};
  cuts.y = {0, instance.height};
  for (const Obstacle& o : clip_to_workspace(instance).obstacles) {
    cuts.x.push_back(o.x_min);
    cuts.x.push_back(o.x_max);
    cuts.y.push_back(o.y_min);
    cuts.y.push_back(o.y_max);
  }
  for (auto* axis : {&cuts.x, &cuts.y}) {
    std::sort(axis->begin(), axis->end());
    axis->erase(std::unique(axis->begin(), axis->end()), axis->end());
  }
  return cuts;
}

namespace {

// Index of the cell column/row whose open interval contains a doubled
// half-integer coordinate.
int locate(const std::vector<int>& cuts, int doubled) {
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (2 * cuts[i] < doubled && doubled < 2 * cuts[i + 1]) {
      return static_cast<int>(i);
    }
  }
  throw std::invalid_argument("query point is not interior to any cell");
}

}  // namespace

Arrangement decompose(const Instance& instance) {
  const Instance clipped = clip_to_workspace(instance);
  const int n = clipped.obstacle_count();
  CoordinateCuts cuts = compress_coordinates(clipped);
  const int cols = cuts.columns();
  const int rows = cuts.rows();

  std::vector<ObstacleSet> cell_cover(cuts.cell_count(), ObstacleSet(n));
  for (int iy = 0; iy < rows; ++iy) {
    const int cy2 = cuts.y[iy] + cuts.y[iy + 1];
    for (int ix = 0; ix < cols; ++ix) {
      const int cx2 = cuts.x[ix] + cuts.x[ix + 1];
      ObstacleSet& cover = cell_cover[iy * cols + ix];
      for (const Obstacle& o : clipped.obstacles) {
        if (o.x_min < o.x_max && o.y_min < o.y_max &&
            o.contains_doubled(cx2, cy2)) {
          cover.insert(o.id);
        }
      }
    }
  }

  // Flood fill in row-major first-touch order.
  std::vector<VertexId> cell_face(cell_cover.size(), -1);
  std::vector<int> face_cell_count;
  std::vector<ObstacleSet> face_cover;
  std::deque<int> frontier;
  for (int start = 0; start < static_cast<int>(cell_cover.size()); ++start) {
    if (cell_face[start] != -1) continue;
    const VertexId face = static_cast<VertexId>(face_cover.size());
    face_cover.push_back(cell_cover[start]);
    face_cell_count.push_back(0);
    cell_face[start] = face;
    frontier.push_back(start);
    while (!frontier.empty()) {
      const int cell = frontier.front();
      frontier.pop_front();
      ++face_cell_count[face];
      const int ix = cell % cols;
      const int iy = cell / cols;
      const int neighbors[4][2] = {{ix - 1, iy}, {ix + 1, iy}, {ix, iy - 1},
                                   {ix, iy + 1}};
      for (const auto& [nx, ny] : neighbors) {
        if (nx < 0 || ny < 0 || nx >= cols || ny >= rows) continue;
        const int next = ny * cols + nx;
        if (cell_face[next] == -1 && cell_cover[next] == cell_cover[start]) {
          cell_face[next] = face;
          frontier.push_back(next);
        }
      }
    }
  }

  // Side-sharing cells in different faces make the faces adjacent.
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int iy = 0; iy < rows; ++iy) {
    for (int ix = 0; ix < cols; ++ix) {
      const VertexId here = cell_face[iy * cols + ix];
      if (ix + 1 < cols && cell_face[iy * cols + ix + 1] != here) {
        edges.emplace_back(here, cell_face[iy * cols + ix + 1]);
      }
      if (iy + 1 < rows && cell_face[(iy + 1) * cols + ix] != here) {
        edges.emplace_back(here, cell_face[(iy + 1) * cols + ix]);
      }
    }
  }

  const VertexId start_face =
      cell_face[locate(cuts.y, clipped.start.y2) * cols +
                locate(cuts.x, clipped.start.x2)];
  const VertexId goal_face =
      cell_face[locate(cuts.y, clipped.goal.y2) * cols +
                locate(cuts.x, clipped.goal.x2)];

  ArrangementGraph graph(n, std::move(face_cover), edges, start_face,
                         goal_face);
  return Arrangement{std::move(cuts), std::move(cell_cover),
                     std::move(cell_face), std::move(face_cell_count),
                     std::move(graph)};
}

ArrangementGraph build_arrangement(const Instance& instance) {
  return decompose(instance).graph;
}

}  // namespace mcr
