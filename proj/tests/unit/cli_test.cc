// Copyright 2026 The ldpcpd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace ldpcpd::cli {
namespace {

const std::filesystem::path kGoldenDir = LDPCPD_GOLDEN_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "ldpcpd");
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  EXPECT_TRUE(in) << path;
  return {std::istreambuf_iterator<char>(in),
          std::istreambuf_iterator<char>()};
}

struct GoldenCase {
  const char* golden;
  std::vector<std::string> args;
};

class GoldenTest : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(GoldenTest, MatchesGoldenFile) {
  const GoldenCase& c = GetParam();
  const Outcome run = Invoke(c.args);
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_EQ(run.out, ReadFile(kGoldenDir / c.golden));
}

TEST_P(GoldenTest, RepeatedRunsAreByteIdentical) {
  const GoldenCase& c = GetParam();
  EXPECT_EQ(Invoke(c.args).out, Invoke(c.args).out);
}

const std::string kConfig = (kGoldenDir / "simulate_config.json").string();

INSTANTIATE_TEST_SUITE_P(
    Subcommands, GoldenTest,
    ::testing::Values(
        GoldenCase{"divergence.out",
                   {"divergence", "--kind", "chernoff", "--p", "0.1,0.9",
                    "--q", "0.9,0.1"}},
        GoldenCase{"mechanism.out",
                   {"mechanism", "--kind", "bm", "--eps", "1", "--p0",
                    "0.5,0.3,0.2", "--p1", "0.1,0.3,0.6"}},
        GoldenCase{"sdpi.out",
                   {"sdpi", "--channel", "rr", "--q", "2", "--eps", "2",
                    "--kind", "jeffreys-inf"}},
        GoldenCase{"detect.out",
                   {"detect", "--p0", "0.9,0.1", "--p1", "0.2,0.8",
                    "--symbols", "0,0,0,1,0,1,1,1"}},
        GoldenCase{"bound.out",
                   {"bound", "--p0", "0.5,0.3,0.2", "--p1", "0.1,0.3,0.6",
                    "--n", "1000", "--alpha", "5,20,80", "--mechanism", "rr",
                    "--eps", "2"}},
        GoldenCase{"simulate.out",
                   {"simulate", "--config", kConfig, "--format", "json"}},
        GoldenCase{"simulate_csv.out",
                   {"simulate", "--config", kConfig, "--format", "csv"}}),
    [](const ::testing::TestParamInfo<GoldenCase>& info) {
      std::string name = info.param.golden;
      return name.substr(0, name.find('.'));
    });

TEST(CliTest, ExamplesFromTheDocumentation) {
  EXPECT_EQ(Invoke({"divergence", "--kind", "chernoff", "--p", "0.1,0.9",
                    "--q", "0.9,0.1"})
                .out,
            "0.510826\n");
  EXPECT_NE(Invoke({"sdpi", "--channel", "rr", "--q", "2", "--eps", "2",
                    "--kind", "jeffreys-inf"})
                .out.find("\"eta\":0.761594"),
            std::string::npos);
  EXPECT_EQ(Invoke({"detect", "--p0", "0.3,0.7", "--p1", "0.3,0.7",
                    "--symbols", "1,0,1,1"})
                .out,
            "1\n");
}

TEST(CliTest, FullPrecisionPrintsSeventeenDigits) {
  const Outcome run = Invoke({"--full-precision", "divergence", "--kind",
                              "tv", "--p", "0.1,0.9", "--q", "0.4,0.6"});
  ASSERT_EQ(run.code, kExitOk);
  EXPECT_EQ(run.out, "0.30000000000000004\n");
}

TEST(CliTest, UnknownFlagIsUsageError) {
  const Outcome run = Invoke({"divergence", "--bogus", "1"});
  EXPECT_EQ(run.code, kExitUsage);
  EXPECT_FALSE(run.err.empty());
}

TEST(CliTest, MissingSubcommandIsUsageError) {
  EXPECT_EQ(Invoke({}).code, kExitUsage);
}

TEST(CliTest, HelpExitsZero) {
  const Outcome run = Invoke({"bound", "--help"});
  EXPECT_EQ(run.code, kExitOk);
  EXPECT_NE(run.out.find("c_tilde_b"), std::string::npos);
}

TEST(CliTest, InvalidPmfIsDomainErrorOnOneLine) {
  const Outcome run = Invoke({"divergence", "--kind", "kl", "--p",
                              "0.5,0.6", "--q", "0.5,0.5"});
  EXPECT_EQ(run.code, kExitDomain);
  ASSERT_FALSE(run.err.empty());
  EXPECT_EQ(run.err.rfind("error: ", 0), 0u);
  EXPECT_EQ(run.err.find('\n'), run.err.size() - 1);
}

TEST(CliTest, NonPositiveEpsilonIsDomainError) {
  EXPECT_EQ(Invoke({"mechanism", "--kind", "rr", "--q", "3", "--eps", "0"})
                .code,
            kExitDomain);
}

TEST(CliTest, MissingConfigIsDomainError) {
  EXPECT_EQ(Invoke({"simulate", "--config", "/nonexistent/config.json"}).code,
            kExitDomain);
}

TEST(CliTest, ScoresFileHasHeaderAndOneRowPerIndex) {
  const auto path =
      std::filesystem::temp_directory_path() / "ldpcpd_cli_scores.csv";
  const Outcome run =
      Invoke({"detect", "--p0", "0.9,0.1", "--p1", "0.2,0.8", "--symbols",
              "0,1,1", "--scores", path.string()});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  std::istringstream lines(ReadFile(path));
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "k,score");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 3);
  std::filesystem::remove(path);
}

TEST(CliTest, SimulateThreadCountDoesNotChangeOutput) {
  const Outcome one =
      Invoke({"simulate", "--config", kConfig, "--threads", "1"});
  const Outcome four =
      Invoke({"simulate", "--config", kConfig, "--threads", "4"});
  ASSERT_EQ(one.code, kExitOk) << one.err;
  EXPECT_EQ(one.out, four.out);
}

TEST(CliTest, SeedOverrideChangesSimulation) {
  const Outcome base = Invoke({"simulate", "--config", kConfig});
  const Outcome other =
      Invoke({"simulate", "--config", kConfig, "--seed", "8"});
  ASSERT_EQ(other.code, kExitOk) << other.err;
  EXPECT_NE(base.out, other.out);
}

}  // namespace
}  // namespace ldpcpd::cli
