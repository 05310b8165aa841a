#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "mcr/cli.hpp"
#include "test_util.hpp"

namespace mcr {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun mcr(std::vector<std::string> args) {
  args.insert(args.begin(), "mcr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class Cli : public ::testing::Test {
 protected:
  std::filesystem::path dir_ = std::filesystem::temp_directory_path() / "mcr_cli_test";
  void SetUp() override { std::filesystem::create_directories(dir_); }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string file(const std::string& name) { return (dir_ / name).string(); }
};

TEST_F(Cli, GenWritesValidInstanceDeterministically) {
  const auto a = file("a.json"), b = file("b.json");
  ASSERT_EQ(mcr({"gen", "--grid", "30", "--n", "100", "--seed", "7", "--out", a}).code, 0);
  ASSERT_EQ(mcr({"gen", "--grid", "30", "--n", "100", "--seed", "7", "--out", b}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  const auto doc = nlohmann::json::parse(slurp(a));
  EXPECT_EQ(doc["obstacles"].size(), 100u);
}

TEST_F(Cli, GenRejectsBadFlags) {
  EXPECT_EQ(mcr({"gen", "--n", "0"}).code, kExitBadInput);
  EXPECT_EQ(mcr({"gen", "--n", "ten"}).code, kExitBadInput);
  EXPECT_EQ(mcr({"gen", "--grid", "10", "--len-min", "5", "--len-max", "4"}).code,
            kExitBadInput);
  EXPECT_EQ(mcr({"frobnicate"}).code, kExitBadInput);
}

TEST_F(Cli, SolveGraphInput) {
  const auto graph = testing::corpus("pocket.graph.json").string();
  const CliRun run = mcr({"solve", "--in", graph, "--graph-input", "--algorithm", "exact"});
  ASSERT_EQ(run.code, 0) << run.err;
  const auto doc = nlohmann::json::parse(run.out);
  EXPECT_EQ(doc["cardinality"], 3);
  EXPECT_EQ(doc["feasible"], true);
  EXPECT_TRUE(doc["stats"].contains("wall_time_ms"));
  EXPECT_TRUE(run.err.empty());
}

TEST_F(Cli, SolveAlphaBelowOptimumExitsOne) {
  const auto graph = testing::corpus("pocket.graph.json").string();
  const CliRun run = mcr({"solve", "--in", graph, "--graph-input", "--algorithm",
                       "exact", "--alpha", "2"});
  EXPECT_EQ(run.code, kExitNoSolution);
  EXPECT_NE(run.err.find("no solution within alpha"), std::string::npos);
  EXPECT_EQ(nlohmann::json::parse(run.out)["outcome"], "no_solution_within_alpha");
}

TEST_F(Cli, SolveEmptyInstanceGreedy) {
  const CliRun run = mcr({"solve", "--in", testing::corpus("empty.instance.json").string(),
                       "--algorithm", "greedy"});
  ASSERT_EQ(run.code, 0) << run.err;
  EXPECT_EQ(nlohmann::json::parse(run.out)["cardinality"], 0);
}

TEST_F(Cli, SolveInvalidInputExitsTwo) {
  std::ofstream(file("bad.json")) << R"({"width": 5})";
  EXPECT_EQ(mcr({"solve", "--in", file("bad.json")}).code, kExitBadInput);
  EXPECT_EQ(mcr({"solve", "--in", file("missing.json")}).code, kExitBadInput);
  std::ofstream(file("dup.json"))
      << R"({"width": 10, "height": 10, "start": [0.5, 0.5], "goal": [3.5, 3.5],
            "obstacles": [{"id": 0, "x_min": 1, "y_min": 1, "x_max": 1, "y_max": 2}]})";
  const CliRun run = mcr({"solve", "--in", file("dup.json")});
  EXPECT_EQ(run.code, kExitBadInput);
  EXPECT_NE(run.err.find("DEGENERATE_RECT"), std::string::npos);
  EXPECT_EQ(mcr({"solve", "--in", file("dup.json"), "--algorithm", "magic"}).code,
            kExitBadInput);
}

TEST_F(Cli, SolveDeterministicWithoutTiming) {
  const auto graph = testing::corpus("greedy_trap.graph.json").string();
  const CliRun a = mcr({"solve", "--in", graph, "--graph-input", "--no-timing"});
  const CliRun b = mcr({"solve", "--in", graph, "--graph-input", "--no-timing"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("wall_time_ms"), std::string::npos);
}

TEST_F(Cli, StatsCommand) {
  const CliRun run = mcr({"stats", "--in", testing::corpus("pocket.graph.json").string(),
                       "--graph-input"});
  ASSERT_EQ(run.code, 0);
  const auto doc = nlohmann::json::parse(run.out);
  EXPECT_EQ(doc["p"], 5);
  EXPECT_EQ(doc["N"], 14);
}

TEST_F(Cli, BenchWritesCsv) {
  const auto out = file("bench.csv");
  const CliRun run = mcr({"bench", "--grid", "12", "--n", "6", "--seeds", "3..7",
                       "--algorithm", "exact", "--timeout-ms", "10000", "--out", out});
  ASSERT_EQ(run.code, 0) << run.err;
  std::istringstream csv(slurp(out));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "seed,n,grid,alpha_int,algorithm,cardinality,timed_out,"
                  "wall_time_ms,states_generated,states_expanded");
  int rows = 0;
  while (std::getline(csv, line)) {
    EXPECT_EQ(line.rfind(std::to_string(3 + rows) + ",6,12,2,exact,", 0), 0u) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 5);
}

TEST_F(Cli, BenchRejectsBadRanges) {
  EXPECT_EQ(mcr({"bench", "--seeds", "5..4"}).code, kExitBadInput);
  EXPECT_EQ(mcr({"bench", "--seeds", "x..4"}).code, kExitBadInput);
  EXPECT_EQ(mcr({"bench", "--seeds", "0..1", "--timeout-ms", "0"}).code, kExitBadInput);
  EXPECT_EQ(mcr({"bench", "--seeds", "0..1", "--algorithm", "oracle"}).code,
            kExitBadInput);  // n = 100 is beyond the oracle
}

TEST_F(Cli, BenchOracleMatchesExact) {
  const CliRun oracle = mcr({"bench", "--grid", "12", "--n", "10", "--seeds", "0..9",
                          "--algorithm", "oracle"});
  const CliRun exact = mcr({"bench", "--grid", "12", "--n", "10", "--seeds", "0..9",
                         "--algorithm", "exact"});
  ASSERT_EQ(oracle.code, 0);
  ASSERT_EQ(exact.code, 0);
  const auto cardinalities = [](const std::string& csv) {
    std::vector<std::string> column;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      std::stringstream row(line);
      std::string field;
      for (int i = 0; i <= 5; ++i) std::getline(row, field, ',');
      column.push_back(field);
    }
    return column;
  };
  EXPECT_EQ(cardinalities(oracle.out), cardinalities(exact.out));
  EXPECT_EQ(cardinalities(exact.out).size(), 10u);
}

}  // namespace
}  // namespace mcr
