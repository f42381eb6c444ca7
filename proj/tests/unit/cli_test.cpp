// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "regenboot/cli.hpp"
#include "regenboot/csv.hpp"
#include "regenboot/manifest.hpp"

namespace regenboot {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("regenboot_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(std::vector<std::string> args, const fs::path& out_dir) {
    args.push_back("--out-dir");
    args.push_back(out_dir.string());
    out_.str("");
    err_.str("");
    return run_cli(args, out_, err_);
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(Cli, SimulateZeroHorizon) {
  ASSERT_EQ(run({"simulate", "--n", "0", "--seed", "7", "--workers", "1"}, dir_), 0)
      << err_.str();
  EXPECT_EQ(slurp(dir_ / "trajectory.csv"), "t,x\n0,0\n");
  EXPECT_EQ(slurp(dir_ / "blocks.csv"), "j,length,f_sum\n");
  EXPECT_EQ(slurp(dir_ / "regen.csv"), "j,tau\n1,0\n");
  EXPECT_TRUE(fs::exists(dir_ / "manifest.json"));
}

TEST_F(Cli, FlagsBeforeSubcommandAlsoWork) {
  ASSERT_EQ(run({"--n", "0", "--seed", "7", "simulate"}, dir_), 0) << err_.str();
  EXPECT_EQ(slurp(dir_ / "trajectory.csv"), "t,x\n0,0\n");
}

TEST_F(Cli, CoverageIsReproducible) {
  const std::vector<std::string> args = {"coverage", "--n", "1000", "--chains", "10",
                                         "--boot-reps", "50", "--seed", "1"};
  ASSERT_EQ(run(args, dir_ / "a"), 0) << err_.str();
  ASSERT_EQ(run(args, dir_ / "b"), 0) << err_.str();
  const std::string a = slurp(dir_ / "a" / "coverage.csv");
  EXPECT_EQ(a, slurp(dir_ / "b" / "coverage.csv"));
  const auto rows = parse_csv(a);
  ASSERT_EQ(rows.size(), 4U);
  EXPECT_EQ(rows[1][1], "rbb");
  EXPECT_EQ(rows[2][1], "rgb");
  EXPECT_EQ(rows[3][1], "normal");
}

TEST_F(Cli, EcdfCompareNormalColumnAtZero) {
  ASSERT_EQ(run({"ecdf-compare", "--n", "10000", "--boot-reps", "500", "--seed", "3"}, dir_), 0)
      << err_.str();
  const auto rows = parse_csv(slurp(dir_ / "ecdf_compare.csv"));
  ASSERT_GT(rows.size(), 2U);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"x", "F_true", "F_rbb", "F_rgb", "F_normal"}));
  bool found = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (std::stod(rows[i][0]) == 0.0) {
      EXPECT_NEAR(std::stod(rows[i][4]), 0.5, 1e-7);
      found = true;
    }
  }
  EXPECT_TRUE(found);
  EXPECT_TRUE(fs::exists(dir_ / "trajectory.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "regen.csv"));
}

TEST_F(Cli, ManifestHashesMatchFiles) {
  ASSERT_EQ(run({"simulate", "--n", "100,200", "--seed", "2"}, dir_), 0) << err_.str();
  const auto doc = nlohmann::json::parse(slurp(dir_ / "manifest.json"));
  EXPECT_EQ(doc["experiment"], "simulate");
  EXPECT_EQ(doc["master_seed"], 2);
  ASSERT_EQ(doc["outputs"].size(), 6U);
  for (const auto& o : doc["outputs"]) {
    EXPECT_EQ(o["sha256"], sha256_file(dir_ / o["path"].get<std::string>()));
  }
  EXPECT_TRUE(fs::exists(dir_ / "trajectory_n100.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "regen_n200.csv"));
}

TEST_F(Cli, InvalidArgumentsExitTwo) {
  EXPECT_EQ(run({"coverage", "--level", "1.5"}, dir_), 2);
  EXPECT_NE(err_.str().find("level"), std::string::npos);
  EXPECT_EQ(run({"coverage", "--method", "xyz"}, dir_), 2);
  EXPECT_EQ(run({"frobnicate"}, dir_), 2);
  EXPECT_EQ(run({"simulate", "--chains", "-3"}, dir_), 2);
  EXPECT_EQ(run({}, dir_), 2);
}

TEST_F(Cli, BadConfigExitsTwo) {
  fs::create_directories(dir_);
  std::ofstream(dir_ / "cfg.json") << "{\"bogus\": 1}";
  EXPECT_EQ(run({"simulate", "--config", (dir_ / "cfg.json").string()}, dir_ / "out"), 2);
}

TEST_F(Cli, ConfigValuesAreOverriddenByFlags) {
  fs::create_directories(dir_);
  std::ofstream(dir_ / "cfg.json") << "{\"n\": [50], \"seed\": 4}";
  ASSERT_EQ(run({"simulate", "--config", (dir_ / "cfg.json").string(), "--seed", "5"}, dir_ / "a"),
            0)
      << err_.str();
  ASSERT_EQ(run({"simulate", "--n", "50", "--seed", "5"}, dir_ / "b"), 0);
  EXPECT_EQ(slurp(dir_ / "a" / "trajectory.csv"), slurp(dir_ / "b" / "trajectory.csv"));
  const auto doc = nlohmann::json::parse(slurp(dir_ / "a" / "manifest.json"));
  EXPECT_EQ(doc["master_seed"], 5);
}

TEST_F(Cli, RuntimeFailureExitsOne) {
  // A two-step chain has at most one complete block.
  EXPECT_EQ(run({"bootstrap", "--n", "2", "--seed", "1"}, dir_), 1);
  EXPECT_FALSE(err_.str().empty());
}

TEST_F(Cli, UnwritableOutputExitsOne) {
  fs::create_directories(dir_);
  std::ofstream(dir_ / "file") << "x";
  EXPECT_EQ(run({"simulate", "--n", "10"}, dir_ / "file" / "sub"), 1);
}

TEST_F(Cli, HelpListsEveryFlag) {
  EXPECT_EQ(run_cli({"--help"}, out_, err_), 0);
  const std::string help = out_.str();
  for (const char* flag : {"--n", "--chains", "--boot-reps", "--true-reps", "--level", "--seed",
                           "--method", "--workers", "--out-dir", "--config", "--anchor",
                           "--studentization", "--max-moment", "--functional", "--theta",
                           "--beta", "--scale", "simulate", "bootstrap", "ecdf-compare",
                           "coverage", "ml-moments", "selftest"}) {
    EXPECT_NE(help.find(flag), std::string::npos) << flag;
  }
}

TEST_F(Cli, SelftestPasses) {
  EXPECT_EQ(run_cli({"selftest"}, out_, err_), 0) << out_.str();
  EXPECT_EQ(out_.str().find("FAIL"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir_));
}

TEST_F(Cli, InvalidWorkerEnvironmentExitsTwo) {
  ::setenv("REGEN_BOOT_WORKERS", "zero", 1);
  EXPECT_EQ(run({"simulate", "--n", "10"}, dir_), 2);
  ::unsetenv("REGEN_BOOT_WORKERS");
}

TEST_F(Cli, WorkerCountDoesNotChangeOutputs) {
  for (const char* cmd : {"bootstrap", "ml-moments"}) {
    std::string first;
    for (const char* w : {"1", "3"}) {
      const fs::path d = dir_ / (std::string(cmd) + w);
      ASSERT_EQ(run({cmd, "--n", "2000", "--chains", "20", "--boot-reps", "100", "--seed", "9",
                     "--workers", w},
                    d),
                0)
          << err_.str();
      const std::string csv = slurp(d / (std::string(cmd) == "bootstrap" ? "bootstrap.csv"
                                                                          : "ml_moments.csv"));
      if (first.empty()) first = csv;
      EXPECT_EQ(csv, first) << cmd;
    }
  }
}

}  // namespace
}  // namespace regenboot
