#include <sstream>

#include "gtest/gtest.h"
#include "mcr/bench.hpp"

namespace mcr {
namespace {

// Vectors computed with an independent mt19937-64 implementation.
TEST(Rng, StandardEngineVectors) {
  std::mt19937_64 reference;  // default seed 5489
  reference.discard(9999);
  EXPECT_EQ(reference(), 9981545732273789042ULL);

  Rng rng(0);
  EXPECT_EQ(rng.next(), 2947667278772165694ULL);
  EXPECT_EQ(rng.next(), 18301848765998365067ULL);
  EXPECT_EQ(rng.next(), 729919693006235833ULL);
}

TEST(Rng, BoundedDrawVectors) {
  Rng rng(7);
  std::vector<int> draws;
  for (int i = 0; i < 8; ++i) draws.push_back(rng.uniform(0, 29));
  EXPECT_EQ(draws, (std::vector<int>{15, 0, 18, 6, 1, 18, 9, 28}));
  EXPECT_THROW(rng.uniform(3, 2), std::invalid_argument);
  EXPECT_EQ(rng.uniform(4, 4), 4);
}

TEST(GenRandomInstance, FollowsDocumentedDrawOrder) {
  GenConfig config = GenConfig::with_defaults(12, 3, 42);
  const Instance instance = gen_random_instance(config);
  EXPECT_EQ(instance.obstacles,
            (std::vector<Obstacle>{{0, 6, 8, 8, 9}, {1, 5, 8, 7, 9},
                                   {2, 10, 1, 12, 2}}));
  EXPECT_EQ(instance.start, HalfPoint::cell_center(0, 10));
  EXPECT_EQ(instance.goal, HalfPoint::cell_center(9, 8));
}

TEST(GenRandomInstance, Deterministic) {
  const GenConfig config = GenConfig::with_defaults(30, 100, 7);
  EXPECT_EQ(dump_instance(gen_random_instance(config)),
            dump_instance(gen_random_instance(config)));
  EXPECT_NE(gen_random_instance(config),
            gen_random_instance(GenConfig::with_defaults(30, 100, 8)));
}

TEST(GenRandomInstance, FullScale) {
  const Instance instance =
      gen_random_instance(GenConfig::with_defaults(30, 100, 1));
  EXPECT_EQ(instance.width, 30);
  EXPECT_EQ(instance.height, 30);
  EXPECT_EQ(instance.obstacle_count(), 100);
  EXPECT_TRUE(validate(instance).empty());
}

TEST(GenRandomInstance, FullLengthSidesClipToRightEdge) {
  GenConfig config = GenConfig::with_defaults(30, 20, 5);
  config.len_min = config.len_max = 30;
  for (const Obstacle& o : gen_random_instance(config).obstacles) {
    EXPECT_EQ(o.x_max, 30);
    EXPECT_LT(o.x_min, o.x_max);
  }
}

TEST(GenRandomInstance, DisjointModeAvoidsOverlap) {
  GenConfig config = GenConfig::with_defaults(14, 10, 3);
  config.disjoint = true;
  const auto obstacles = gen_random_instance(config).obstacles;
  for (std::size_t i = 0; i < obstacles.size(); ++i) {
    for (std::size_t j = i + 1; j < obstacles.size(); ++j) {
      const Obstacle& a = obstacles[i];
      const Obstacle& b = obstacles[j];
      EXPECT_FALSE(a.x_min < b.x_max && b.x_min < a.x_max &&
                   a.y_min < b.y_max && b.y_min < a.y_max);
    }
  }
}

TEST(GenRandomInstance, RetryExhausted) {
  // One cell: the goal can never differ from the start.
  GenConfig config = GenConfig::with_defaults(1, 1, 0);
  try {
    gen_random_instance(config);
    FAIL() << "expected GenerationError";
  } catch (const GenerationError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("RETRY_EXHAUSTED", 0), 0u);
  }
}

TEST(GenConfig, Validation) {
  GenConfig config = GenConfig::with_defaults(30, 100, 0);
  EXPECT_EQ(config.len_max, 7);
  EXPECT_NO_THROW(check_config(config));
  config.n = 0;
  EXPECT_THROW(check_config(config), std::invalid_argument);
  config = GenConfig::with_defaults(30, 10, 0);
  config.len_min = 8;
  EXPECT_THROW(check_config(config), std::invalid_argument);
  config = GenConfig::with_defaults(30, 10, 0);
  config.breadth_max = 31;
  EXPECT_THROW(check_config(config), std::invalid_argument);
}

TEST(Algorithm, NamesRoundTrip) {
  for (auto a : {Algorithm::kExact, Algorithm::kGreedy, Algorithm::kWeighted,
                 Algorithm::kUnitWeighted, Algorithm::kOracle}) {
    EXPECT_EQ(parse_algorithm(to_string(a)), a);
  }
  EXPECT_FALSE(parse_algorithm("astar"));
}

std::vector<GenConfig> seeds(int grid, int n, int count) {
  std::vector<GenConfig> configs;
  for (int s = 0; s < count; ++s) {
    configs.push_back(GenConfig::with_defaults(grid, n, s));
  }
  return configs;
}

// Drops the wall_time_ms column.
std::string strip_timing(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, result;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::stringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (line.back() == ',') fields.push_back("");
    fields.erase(fields.begin() + 7);
    for (std::size_t i = 0; i < fields.size(); ++i) {
      result += (i ? "," : "") + fields[i];
    }
    result += "\n";
  }
  return result;
}

TEST(RunBench, NoSeedsGivesHeaderOnly) {
  std::ostringstream out;
  write_bench_csv(run_bench({}, Algorithm::kExact, std::chrono::seconds(1)), out);
  EXPECT_EQ(out.str(), std::string(kBenchCsvHeader) + "\n");
}

TEST(RunBench, RejectsNonPositiveTimeout) {
  EXPECT_THROW(run_bench(seeds(10, 3, 1), Algorithm::kExact,
                         std::chrono::milliseconds(0)),
               std::invalid_argument);
}

TEST(RunBench, OracleAndExactAgree) {
  const auto configs = seeds(12, 10, 20);
  const auto oracle =
      run_bench(configs, Algorithm::kOracle, std::chrono::seconds(60));
  const auto exact = run_bench(configs, Algorithm::kExact, std::chrono::seconds(60));
  ASSERT_EQ(oracle.size(), 20u);
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    EXPECT_EQ(oracle[i].seed, i);
    EXPECT_EQ(oracle[i].alpha_int, 3);
    ASSERT_FALSE(oracle[i].timed_out);
    EXPECT_EQ(oracle[i].cardinality, exact[i].cardinality);
  }
}

TEST(RunBench, ScheduleDoesNotChangeRecords) {
  auto configs = seeds(16, 20, 12);
  std::reverse(configs.begin(), configs.end());
  std::ostringstream serial, parallel;
  write_bench_csv(run_bench(configs, Algorithm::kExact, std::chrono::seconds(60), 1),
                  serial);
  write_bench_csv(run_bench(configs, Algorithm::kExact, std::chrono::seconds(60), 4),
                  parallel);
  EXPECT_EQ(strip_timing(serial.str()), strip_timing(parallel.str()));
  // Sorted by seed regardless of input order.
  EXPECT_EQ(serial.str().substr(serial.str().find('\n') + 1, 2), "0,");
}

TEST(RunBench, TimeoutIsCensored) {
  const BenchRecord record = bench_one(GenConfig::with_defaults(30, 100, 0),
                                       Algorithm::kExact,
                                       std::chrono::milliseconds(1));
  if (record.timed_out) {
    EXPECT_FALSE(record.cardinality.has_value());
  } else {
    EXPECT_TRUE(record.cardinality.has_value());
  }
}

}  // namespace
}  // namespace mcr
