#ifndef MCR_ARRANGEMENT_HPP
#define MCR_ARRANGEMENT_HPP

#include <vector>

#include "mcr/graph.hpp"
#include "mcr/instance.hpp"

namespace mcr {

// Sorted, deduplicated cut coordinates. Consecutive entries delimit a column
// (resp. row) of cells.
struct CoordinateCuts {
  std::vector<int> x;
  std::vector<int> y;

  int columns() const { return static_cast<int>(x.size()) - 1; }
  int rows() const { return static_cast<int>(y.size()) - 1; }
  int cell_count() const { return columns() * rows(); }
};

CoordinateCuts compress_coordinates(const Instance& instance);

// The cell decomposition behind an arrangement graph. Cells are indexed
// row-major: cell (ix, iy) has index iy * columns + ix.
struct Arrangement {
  CoordinateCuts cuts;
  std::vector<ObstacleSet> cell_cover;
  std::vector<VertexId> cell_face;
  std::vector<int> face_cell_count;
  ArrangementGraph graph;

  int cell_index(int ix, int iy) const { return iy * cuts.columns() + ix; }
};

// Faces are maximal 4-connected groups of cells with equal cover sets;
// two faces are adjacent iff they share a boundary segment of positive
// length. Face ids follow the first cell of each face in row-major order.
// Out-of-workspace parts of rectangles are clipped first.
Arrangement decompose(const Instance& instance);

ArrangementGraph build_arrangement(const Instance& instance);

}  // namespace mcr

#endif  // MCR_ARRANGEMENT_HPP
