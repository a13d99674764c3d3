#include "cli.hpp"

#include "dasmr/config.hpp"
#include "dasmr/heatmap.hpp"
#include "dasmr/trajectory.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using dasmr::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() / (std::string("dasmr_cli_") + info->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        unsetenv("DASMR_CONFIG");
    }
    void TearDown() override {
        fs::remove_all(dir_);
        unsetenv("DASMR_CONFIG");
    }
    std::string path(const std::string& leaf) const { return (dir_ / leaf).string(); }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, NoSubcommandIsUsageError) {
    EXPECT_EQ(invoke({}).code, dasmr::cli::kExitUsage);
    EXPECT_EQ(invoke({"fly"}).code, dasmr::cli::kExitUsage);
    EXPECT_EQ(invoke({"--help"}).code, dasmr::cli::kExitOk);
}

TEST_F(CliTest, RolloutWritesEpisodesAndReport) {
    const auto r = invoke({"rollout", "--policy", "pursuit", "--episodes", "3", "--seed", "10", "--out", path("run")});
    ASSERT_EQ(r.code, 0) << r.err;
    for (const char* leaf : {"episode_000.csv", "episode_001.csv", "episode_002.csv", "report.json", "report.txt"}) {
        EXPECT_TRUE(fs::exists(dir_ / "run" / leaf)) << leaf;
    }
    EXPECT_NE(r.out.find("SPL"), std::string::npos);
    const auto file = dasmr::read_trajectory(dir_ / "run" / "episode_001.csv");
    EXPECT_EQ(file.header.episode, 1);
    EXPECT_EQ(file.header.config.env.seed, 10u);
}

TEST_F(CliTest, RolloutIsByteIdenticalAcrossRuns) {
    ASSERT_EQ(invoke({"rollout", "--policy", "random", "--episodes", "2", "--seed", "7", "--out", path("a")}).code, 0);
    ASSERT_EQ(invoke({"rollout", "--policy", "random", "--episodes", "2", "--seed", "7", "--out", path("b")}).code, 0);
    for (const char* leaf : {"episode_000.csv", "episode_001.csv", "report.json"}) {
        EXPECT_EQ(slurp(dir_ / "a" / leaf), slurp(dir_ / "b" / leaf)) << leaf;
    }
}

TEST_F(CliTest, RolloutRejectsBadArguments) {
    EXPECT_EQ(invoke({"rollout", "--episodes", "0", "--out", path("x")}).code, dasmr::cli::kExitUsage);
    EXPECT_EQ(invoke({"rollout", "--episodes", "1", "--policy", "magic", "--out", path("x")}).code,
              dasmr::cli::kExitUsage);
    EXPECT_EQ(invoke({"rollout", "--out", path("x")}).code, dasmr::cli::kExitUsage);
}

TEST_F(CliTest, ConfigErrorsNameTheField) {
    std::ofstream(path("bad.json")) << R"({"env": {"d_th": -1}})";
    const auto r = invoke({"rollout", "--episodes", "1", "--config", path("bad.json"), "--out", path("x")});
    EXPECT_EQ(r.code, dasmr::cli::kExitError);
    EXPECT_NE(r.err.find("d_th"), std::string::npos) << r.err;

    std::ofstream(path("typo.json")) << R"({"robot": {"wheel_radious": 0.1}})";
    const auto t = invoke({"rollout", "--episodes", "1", "--config", path("typo.json"), "--out", path("x")});
    EXPECT_EQ(t.code, dasmr::cli::kExitError);
    EXPECT_NE(t.err.find("robot.wheel_radious"), std::string::npos) << t.err;
}

TEST_F(CliTest, FlagsOverrideConfigFromEnvironment) {
    std::ofstream(path("cfg.json")) << R"({"env": {"seed": 11, "max_episode_steps": 40}})";
    setenv("DASMR_CONFIG", path("cfg.json").c_str(), 1);
    ASSERT_EQ(invoke({"rollout", "--policy", "zero", "--episodes", "1", "--max-steps", "25", "--out", path("o")}).code,
              0);
    const auto file = dasmr::read_trajectory(dir_ / "o" / "episode_000.csv");
    EXPECT_EQ(file.header.config.env.seed, 11u);
    EXPECT_EQ(file.header.config.env.max_episode_steps, 25);
    EXPECT_EQ(file.rows.size(), 25u);
}

TEST_F(CliTest, HeatmapWritesCsvAndImage) {
    const auto r = invoke({"heatmap", "--reward", "es", "--c", "4", "--resolution", "21", "--out", path("h")});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream csv(dir_ / "h" / "heatmap_es.csv");
    const dasmr::GridSpec spec{-4, 4, -4, 4, 21, 21};
    const auto grid = dasmr::read_grid_csv(csv, spec);
    EXPECT_EQ(grid.at(10, 10), 0.0);
    EXPECT_DOUBLE_EQ(grid.at(10, 20), -16.0);
    EXPECT_EQ(slurp(dir_ / "h" / "heatmap_es.ppm").substr(0, 2), "P6");
    EXPECT_EQ(invoke({"heatmap", "--resolution", "1", "--out", path("h")}).code, dasmr::cli::kExitUsage);
    EXPECT_EQ(invoke({"heatmap", "--reward", "banana", "--out", path("h")}).code, dasmr::cli::kExitError);
}

TEST_F(CliTest, PlanReachesNearbyGoal) {
    const auto r = invoke({"plan", "--goal", "1", "0", "--iterations", "10", "--population", "32", "--horizon", "200",
                           "--probe", "hs:2", "--probe", "ch", "--out", path("plan.csv")});
    ASSERT_EQ(r.code, dasmr::cli::kExitOk) << r.out << r.err;
    EXPECT_NE(r.out.find("cumulative hs(c=2)"), std::string::npos) << r.out;
    const auto file = dasmr::read_trajectory(path("plan.csv"));
    EXPECT_TRUE(file.rows.back().terminated);
}

TEST_F(CliTest, PlanReportsUnreachedGoal) {
    const auto r = invoke({"plan", "--goal", "0", "3", "--iterations", "1", "--population", "20", "--horizon", "20"});
    EXPECT_EQ(r.code, dasmr::cli::kExitNotReached) << r.err;
    EXPECT_EQ(invoke({"plan", "--goal", "1"}).code, dasmr::cli::kExitUsage);
}

TEST_F(CliTest, EvalRederivesAtThreshold) {
    ASSERT_EQ(invoke({"rollout", "--policy", "pursuit", "--episodes", "4", "--seed", "3", "--out", path("r")}).code, 0);
    const auto wide = invoke({"eval", "--dir", path("r"), "--d-th", "0.15", "--json", path("wide.json")});
    const auto tight = invoke({"eval", "--dir", path("r"), "--d-th", "0.10", "--json", path("tight.json")});
    ASSERT_EQ(wide.code, 0) << wide.err;
    ASSERT_EQ(tight.code, 0) << tight.err;
    EXPECT_EQ(slurp(path("wide.json")), slurp(dir_ / "r" / "report.json"));
}

TEST_F(CliTest, EvalDiagnosesBadFiles) {
    fs::create_directories(dir_ / "empty");
    EXPECT_EQ(invoke({"eval", "--dir", path("empty")}).code, dasmr::cli::kExitUsage);

    ASSERT_EQ(invoke({"rollout", "--policy", "zero", "--episodes", "1", "--max-steps", "5", "--out", path("r")}).code,
              0);
    std::ofstream(dir_ / "r" / "episode_999.csv") << "not a trajectory\n";
    const auto r = invoke({"eval", "--dir", path("r")});
    EXPECT_EQ(r.code, dasmr::cli::kExitError);
    EXPECT_NE(r.err.find("episode_999.csv"), std::string::npos) << r.err;
}
