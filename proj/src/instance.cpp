#include "mcr/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace mcr {

using nlohmann::ordered_json;

std::string_view to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::kEmptyWorkspace: return "EMPTY_WORKSPACE";
    case ViolationCode::kDegenerateRect: return "DEGENERATE_RECT";
    case ViolationCode::kRectOutsideWorkspace: return "RECT_OUTSIDE_WORKSPACE";
    case ViolationCode::kDuplicateId: return "DUPLICATE_ID";
    case ViolationCode::kIdOutOfRange: return "ID_OUT_OF_RANGE";
    case ViolationCode::kStartOutside: return "START_OUTSIDE";
    case ViolationCode::kGoalOutside: return "GOAL_OUTSIDE";
    case ViolationCode::kStartNotCellCenter: return "START_NOT_CELL_CENTER";
    case ViolationCode::kGoalNotCellCenter: return "GOAL_NOT_CELL_CENTER";
    case ViolationCode::kStartEqualsGoal: return "START_EQUALS_GOAL";
    case ViolationCode::kTooManyObstacles: return "TOO_MANY_OBSTACLES";
  }
  return "UNKNOWN";
}

namespace {

bool strictly_inside(const Instance& instance, HalfPoint p) {
  return 0 < p.x2 && p.x2 < 2 * instance.width && 0 < p.y2 &&
         p.y2 < 2 * instance.height;
}

std::string describe(const Obstacle& o) {
  std::ostringstream out;
  out << "obstacle " << o.id << " (" << o.x_min << "," << o.y_min << ")-("
      << o.x_max << "," << o.y_max << ")";
  return out.str();
}

}  // namespace

std::vector<Violation> validate(const Instance& instance) {
  std::vector<Violation> violations;
  const int n = instance.obstacle_count();

  if (instance.width <= 0 || instance.height <= 0) {
    violations.push_back({ViolationCode::kEmptyWorkspace, -1,
                          "workspace extents must be positive"});
  }
  if (static_cast<std::size_t>(n) > ObstacleSet::kCapacity) {
    violations.push_back({ViolationCode::kTooManyObstacles, -1,
                          std::to_string(n) + " obstacles exceed capacity " +
                              std::to_string(ObstacleSet::kCapacity)});
  }

  std::set<ObstacleId> seen;
  for (int i = 0; i < n; ++i) {
    const Obstacle& o = instance.obstacles[i];
    if (o.x_min >= o.x_max || o.y_min >= o.y_max) {
      violations.push_back({ViolationCode::kDegenerateRect, i,
                            describe(o) + " has zero or negative extent"});
    } else if (o.x_max <= 0 || o.x_min >= instance.width || o.y_max <= 0 ||
               o.y_min >= instance.height) {
      violations.push_back({ViolationCode::kRectOutsideWorkspace, i,
                            describe(o) + " vanishes when clipped"});
    }
    if (o.id < 0 || o.id >= n) {
      violations.push_back({ViolationCode::kIdOutOfRange, i,
                            describe(o) + ": ids must be 0.." +
                                std::to_string(n - 1)});
    } else if (!seen.insert(o.id).second) {
      violations.push_back(
          {ViolationCode::kDuplicateId, i, describe(o) + ": duplicate id"});
    }
  }

  if (!strictly_inside(instance, instance.start)) {
    violations.push_back({ViolationCode::kStartOutside, -1,
                          "start must lie strictly inside the workspace"});
  }
  if (!instance.start.is_cell_center()) {
    violations.push_back({ViolationCode::kStartNotCellCenter, -1,
                          "start coordinates must both be k+0.5"});
  }
  if (!strictly_inside(instance, instance.goal)) {
    violations.push_back({ViolationCode::kGoalOutside, -1,
                          "goal must lie strictly inside the workspace"});
  }
  if (!instance.goal.is_cell_center()) {
    violations.push_back({ViolationCode::kGoalNotCellCenter, -1,
                          "goal coordinates must both be k+0.5"});
  }
  if (instance.start == instance.goal) {
    violations.push_back(
        {ViolationCode::kStartEqualsGoal, -1, "start and goal coincide"});
  }
  return violations;
}

Instance clip_to_workspace(const Instance& instance) {
  Instance clipped = instance;
  for (Obstacle& o : clipped.obstacles) {
    o.x_min = std::clamp(o.x_min, 0, instance.width);
    o.x_max = std::clamp(o.x_max, 0, instance.width);
    o.y_min = std::clamp(o.y_min, 0, instance.height);
    o.y_max = std::clamp(o.y_max, 0, instance.height);
  }
  return clipped;
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string text = "invalid instance:";
  for (const Violation& v : violations) {
    text += " ";
    text += to_string(v.code);
    text += " (" + v.message + ");";
  }
  return text;
}

const ordered_json& field(const ordered_json& object, const char* name,
                          const std::string& where) {
  if (!object.is_object()) {
    throw ParseError(where + ": expected an object");
  }
  auto it = object.find(name);
  if (it == object.end()) {
    throw ParseError(where + ": missing field '" + name + "'");
  }
  return *it;
}

int integer_field(const ordered_json& object, const char* name,
                  const std::string& where) {
  const ordered_json& value = field(object, name, where);
  if (!value.is_number_integer()) {
    throw ParseError(where + "." + name + ": expected an integer, got " +
                     value.dump());
  }
  return value.get<int>();
}

// Accepts integers and exact halves, returned doubled.
int half_coordinate(const ordered_json& value, const std::string& where) {
  if (value.is_number_integer()) return 2 * value.get<int>();
  if (value.is_number_float()) {
    const double doubled = value.get<double>() * 2.0;
    if (std::isfinite(doubled) && doubled == std::floor(doubled) &&
        std::fabs(doubled) < 1e9) {
      return static_cast<int>(doubled);
    }
  }
  throw ParseError(where + ": expected an integer or k+0.5, got " +
                   value.dump());
}

HalfPoint point_field(const ordered_json& object, const char* name) {
  const ordered_json& value = field(object, name, "instance");
  const std::string where = std::string("instance.") + name;
  if (!value.is_array() || value.size() != 2) {
    throw ParseError(where + ": expected [x, y]");
  }
  return {half_coordinate(value[0], where + "[0]"),
          half_coordinate(value[1], where + "[1]")};
}

ordered_json half_to_json(int doubled) {
  if (doubled % 2 == 0) return doubled / 2;
  return doubled / 2.0;
}

}  // namespace

InvalidInstance::InvalidInstance(std::vector<Violation> violations)
    : std::runtime_error(summarize(violations)),
      violations_(std::move(violations)) {}

Instance parse_instance(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  Instance instance;
  instance.width = integer_field(doc, "width", "instance");
  instance.height = integer_field(doc, "height", "instance");
  instance.start = point_field(doc, "start");
  instance.goal = point_field(doc, "goal");
  const ordered_json& obstacles = field(doc, "obstacles", "instance");
  if (!obstacles.is_array()) {
    throw ParseError("instance.obstacles: expected an array");
  }
  for (std::size_t i = 0; i < obstacles.size(); ++i) {
    const std::string where = "instance.obstacles[" + std::to_string(i) + "]";
    const ordered_json& o = obstacles[i];
    instance.obstacles.push_back({integer_field(o, "id", where),
                                  integer_field(o, "x_min", where),
                                  integer_field(o, "y_min", where),
                                  integer_field(o, "x_max", where),
                                  integer_field(o, "y_max", where)});
  }
  return instance;
}

std::string dump_instance(const Instance& instance) {
  ordered_json doc;
  doc["width"] = instance.width;
  doc["height"] = instance.height;
  doc["start"] = {half_to_json(instance.start.x2),
                  half_to_json(instance.start.y2)};
  doc["goal"] = {half_to_json(instance.goal.x2), half_to_json(instance.goal.y2)};
  ordered_json obstacles = ordered_json::array();
  for (const Obstacle& o : instance.obstacles) {
    obstacles.push_back({{"id", o.id},
                         {"x_min", o.x_min},
                         {"y_min", o.y_min},
                         {"x_max", o.x_max},
                         {"y_max", o.y_max}});
  }
  doc["obstacles"] = std::move(obstacles);
  return doc.dump(1) + "\n";
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  Instance instance;
  try {
    instance = parse_instance(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  auto violations = validate(instance);
  if (!violations.empty()) throw InvalidInstance(std::move(violations));
  return instance;
}

void write_instance(const Instance& instance,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << dump_instance(instance);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace mcr
