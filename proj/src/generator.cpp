#include <algorithm>
#include <limits>
#include <string>

#include "mcr/bench.hpp"

namespace mcr {

int Rng::uniform(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t range =
      static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
  const std::uint64_t threshold = (0 - range) % range;  // 2^64 mod range
  std::uint64_t r;
  do {
    r = engine_();
  } while (r < threshold);
  return static_cast<int>(lo + static_cast<std::int64_t>(r % range));
}

GenConfig GenConfig::with_defaults(int grid, int n, std::uint64_t seed) {
  GenConfig config;
  config.grid = grid;
  config.n = n;
  config.seed = seed;
  config.len_min = 1;
  config.breadth_min = 1;
  config.len_max = std::max(1, grid / 4);
  config.breadth_max = config.len_max;
  return config;
}

void check_config(const GenConfig& config) {
  const auto fail = [](const std::string& message) {
    throw std::invalid_argument(message);
  };
  if (config.grid < 1) fail("grid must be >= 1");
  if (config.n < 1) fail("n must be >= 1");
  if (static_cast<std::size_t>(config.n) > ObstacleSet::kCapacity) {
    fail("n exceeds obstacle capacity " +
         std::to_string(ObstacleSet::kCapacity));
  }
  if (config.len_min < 1 || config.len_min > config.len_max ||
      config.len_max > config.grid) {
    fail("need 1 <= len_min <= len_max <= grid");
  }
  if (config.breadth_min < 1 || config.breadth_min > config.breadth_max ||
      config.breadth_max > config.grid) {
    fail("need 1 <= breadth_min <= breadth_max <= grid");
  }
}

namespace {

bool interiors_overlap(const Obstacle& a, const Obstacle& b) {
  return a.x_min < b.x_max && b.x_min < a.x_max && a.y_min < b.y_max &&
         b.y_min < a.y_max;
}

}  // namespace

Instance gen_random_instance(const GenConfig& config) {
  check_config(config);
  Rng rng(config.seed);
  const int grid = config.grid;

  Instance instance;
  instance.width = grid;
  instance.height = grid;
  instance.obstacles.reserve(config.n);
  for (int i = 0; i < config.n; ++i) {
    for (int attempt = 0;; ++attempt) {
      if (attempt == kMaxGenerationRetries) {
        throw GenerationError("RETRY_EXHAUSTED: no room for obstacle " +
                              std::to_string(i));
      }
      const int ax = rng.uniform(0, grid - 1);
      const int ay = rng.uniform(0, grid - 1);
      const int length = rng.uniform(config.len_min, config.len_max);
      const int breadth = rng.uniform(config.breadth_min, config.breadth_max);
      const Obstacle candidate{i, ax, ay, std::min(ax + length, grid),
                               std::min(ay + breadth, grid)};
      const bool clash =
          config.disjoint &&
          std::any_of(instance.obstacles.begin(), instance.obstacles.end(),
                      [&](const Obstacle& o) {
                        return interiors_overlap(o, candidate);
                      });
      if (!clash) {
        instance.obstacles.push_back(candidate);
        break;
      }
    }
  }

  const int sx = rng.uniform(0, grid - 1);
  const int sy = rng.uniform(0, grid - 1);
  instance.start = HalfPoint::cell_center(sx, sy);
  for (int attempt = 0;; ++attempt) {
    if (attempt == kMaxGenerationRetries) {
      throw GenerationError("RETRY_EXHAUSTED: no goal cell distinct from start");
    }
    const int gx = rng.uniform(0, grid - 1);
    const int gy = rng.uniform(0, grid - 1);
    instance.goal = HalfPoint::cell_center(gx, gy);
    if (!(instance.goal == instance.start)) break;
  }
  return instance;
}

}  // namespace mcr
