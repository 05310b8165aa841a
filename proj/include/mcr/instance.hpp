#ifndef MCR_INSTANCE_HPP
#define MCR_INSTANCE_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcr/obstacle_set.hpp"

namespace mcr {

// Axis-parallel closed rectangle in integer workspace coordinates.
struct Obstacle {
  ObstacleId id = 0;
  int x_min = 0;
  int y_min = 0;
  int x_max = 0;
  int y_max = 0;

  // Closed-rectangle membership for a point given in doubled coordinates.
  bool contains_doubled(int x2, int y2) const {
    return 2 * x_min <= x2 && x2 <= 2 * x_max && 2 * y_min <= y2 &&
           y2 <= 2 * y_max;
  }

  friend bool operator==(const Obstacle&, const Obstacle&) = default;
};

// A point whose coordinates are integers or exact halves. Stored doubled so
// that (2.5, 7) is {5, 14} and nothing is ever rounded.
struct HalfPoint {
  int x2 = 0;
  int y2 = 0;

  static HalfPoint cell_center(int cx, int cy) {
    return {2 * cx + 1, 2 * cy + 1};
  }
  bool is_cell_center() const { return (x2 & 1) != 0 && (y2 & 1) != 0; }
  double x() const { return x2 / 2.0; }
  double y() const { return y2 / 2.0; }

  friend bool operator==(const HalfPoint&, const HalfPoint&) = default;
};

struct Instance {
  int width = 0;
  int height = 0;
  std::vector<Obstacle> obstacles;
  HalfPoint start;
  HalfPoint goal;

  int obstacle_count() const { return static_cast<int>(obstacles.size()); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

enum class ViolationCode {
  kEmptyWorkspace,
  kDegenerateRect,
  kRectOutsideWorkspace,
  kDuplicateId,
  kIdOutOfRange,
  kStartOutside,
  kGoalOutside,
  kStartNotCellCenter,
  kGoalNotCellCenter,
  kStartEqualsGoal,
  kTooManyObstacles,
};

std::string_view to_string(ViolationCode code);

struct Violation {
  ViolationCode code;
  // Index into Instance::obstacles, or -1 when not about an obstacle.
  int obstacle_index = -1;
  std::string message;
};

// Every invariant violation, in a fixed order: workspace, then obstacles in
// list order, then start and goal. Rectangles that poke out of the workspace
// are not violations; they are clipped by clip_to_workspace().
std::vector<Violation> validate(const Instance& instance);

// Copy of the instance with every rectangle intersected with the workspace.
Instance clip_to_workspace(const Instance& instance);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by read_instance() when the file parses but fails validate().
class InvalidInstance : public std::runtime_error {
 public:
  explicit InvalidInstance(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

Instance parse_instance(std::string_view text);
std::string dump_instance(const Instance& instance);

Instance read_instance(const std::filesystem::path& path);
void write_instance(const Instance& instance,
                    const std::filesystem::path& path);

}  // namespace mcr

#endif  // MCR_INSTANCE_HPP
