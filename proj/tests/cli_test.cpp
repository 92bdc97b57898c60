// Copyright 2026 The weylmul Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "weyl_test_support.hpp"
#include "weylcli/cli.hpp"

namespace weyltest {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = weylcli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

TEST(CliMul, Examples) {
  EXPECT_EQ(run_cli({"mul", "D", "x"}).out, "1 + x*D\n");
  EXPECT_EQ(run_cli({"mul", "0", "x*D"}).out, "0\n");
  EXPECT_EQ(run_cli({"mul", "--algorithm", "fast", "D", "x"}).out, "1 + x*D\n");
  EXPECT_EQ(run_cli({"--field", "fp:7", "mul", "x^3*D", "x"}).out, "x^3 + x^4*D\n");
}

TEST(CliReflect, Examples) {
  EXPECT_EQ(run_cli({"reflect", "x"}).out, "D\n");
  EXPECT_EQ(run_cli({"reflect", "--inverse", "D"}).out, "x\n");
  EXPECT_EQ(run_cli({"reflect", "x*D"}).out, "-1 - x*D\n");
}

TEST(CliMul, JsonInputAndOutput) {
  const auto r = run_cli({"--format", "json", "mul", "D", "x"});
  ASSERT_EQ(r.code, weylcli::kExitOk);
  EXPECT_EQ(r.out, "{\"field\":\"rational\",\"terms\":[[0,0,\"1\"],[1,1,\"1\"]]}\n");
  const auto again = run_cli({"mul", R"({"field":"rational","terms":[[1,0,"1"]]})", "x"});
  EXPECT_EQ(again.out, "1 + x*D\n");
}

TEST(CliMul, OperandFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "weylmul_cli_test_operand.txt";
  {
    std::ofstream f(path);
    f << "D\n";
  }
  EXPECT_EQ(run_cli({"mul", "@" + path.string(), "x"}).out, "1 + x*D\n");
  std::filesystem::remove(path);
}

TEST(CliErrors, ExitCodes) {
  EXPECT_EQ(run_cli({"mul", "x^", "D"}).code, weylcli::kExitUsage);
  EXPECT_EQ(run_cli({"mul", "x"}).code, weylcli::kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, weylcli::kExitUsage);
  EXPECT_EQ(run_cli({"--field", "fp:8", "mul", "x", "D"}).code, weylcli::kExitUsage);
  EXPECT_EQ(run_cli({"--format", "xml", "mul", "x", "D"}).code, weylcli::kExitUsage);
  EXPECT_EQ(run_cli({"mul", R"({"field":"fp:7","terms":[]})", "x"}).code, weylcli::kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).code, weylcli::kExitOk);

  // 8 * 40 exceeds 5.
  std::string big;
  for (int i = 0; i < 40; ++i) big += (i ? " + x^" : "x^") + std::to_string(i) + "*D^" + std::to_string(i);
  const auto r = run_cli({"--field", "fp:5", "mul", "--algorithm", "fast", big, big});
  EXPECT_EQ(r.code, weylcli::kExitCharacteristic);
  EXPECT_FALSE(r.err.empty());
}

TEST(CliVerify, DeterministicReport) {
  const std::vector<std::string> args = {"verify", "--seed", "42"};
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  ASSERT_EQ(a.code, weylcli::kExitOk) << a.out << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto lines = lines_of(a.out);
  ASSERT_FALSE(lines.empty());
  EXPECT_EQ(lines.front(), "verify seed=42 trials=25");
  std::size_t checks = 0;
  ASSERT_EQ(std::sscanf(lines.back().c_str(), "PASS %zu checks", &checks), 1) << lines.back();
  EXPECT_GE(checks, 1000u);
  EXPECT_NE(run_cli({"verify", "--seed", "43"}).out, a.out);
}

TEST(CliVerify, FaultIsReportedWithReproducer) {
  weylcli::VerifyConfig config;
  config.seed = 7;
  config.trials = 3;
  config.profiles = {{8, 8}};
  config.fields = {weyl::FieldDescriptor::prime(2147483647)};
  config.fault = "mul_fast";
  std::ostringstream out;
  const auto result = weylcli::run_verify(config, out);
  EXPECT_EQ(result.failures, 3u);
  const auto text = out.str();
  EXPECT_NE(text.find("FAIL 3 of"), std::string::npos) << text;
  EXPECT_NE(text.find("reproducer: weylmul verify --seed 7 --field fp:2147483647 --profiles 8x8 --trials 3"),
            std::string::npos)
      << text;
  EXPECT_NE(text.find("first failure: mul_fast"), std::string::npos) << text;

  config.fault.reset();
  std::ostringstream clean;
  EXPECT_EQ(weylcli::run_verify(config, clean).failures, 0u);
}

TEST(CliBench, CsvShape) {
  const auto r = run_cli({"bench", "--reps", "3", "--profiles", "16x4,8x8", "--seed", "1"});
  ASSERT_EQ(r.code, weylcli::kExitOk) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0], "algorithm,d,r,field,reps,median_ns");
  EXPECT_EQ(lines[1].rfind("naive,16,4,fp:2147483647,3,", 0), 0u) << lines[1];
  EXPECT_EQ(lines[2].rfind("naive,8,8,fp:2147483647,3,", 0), 0u) << lines[2];
  EXPECT_EQ(lines[3].rfind("fast,16,4,fp:2147483647,3,", 0), 0u) << lines[3];
  EXPECT_EQ(run_cli({"bench", "--reps", "2", "--profiles", "16x4"}).code, weylcli::kExitUsage);
  const auto only = run_cli({"bench", "--algorithm", "naive", "--reps", "3", "--profiles", "16x4"});
  EXPECT_EQ(lines_of(only.out).size(), 2u);
}

TEST(CliProfiles, ParseAndFormat) {
  const auto p = weylcli::parse_profiles("8x8,16x4");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[1], (Bidegree{16, 4}));
  EXPECT_EQ(weylcli::format_profile(p[1]), "16x4");
  EXPECT_THROW(weylcli::parse_profiles("8y8"), weyl::ParseError);
  EXPECT_THROW(weylcli::parse_profiles("0x8"), weyl::ParseError);
}

TEST(CliMul, AlgorithmsAgreeThroughTextInterface) {
  Rng rng(91);
  for (int t = 0; t < 20; ++t) {
    const auto k = random_small_operator(kQ, {10, 10}, rng);
    const auto l = random_small_operator(kQ, {10, 10}, rng);
    const auto ks = weyl::to_string(k), ls = weyl::to_string(l);
    const auto naive = run_cli({"mul", "--algorithm", "naive", ks, ls});
    const auto fast = run_cli({"mul", "--algorithm", "fast", ks, ls});
    ASSERT_EQ(naive.code, 0);
    ASSERT_EQ(naive.out, fast.out);
    ASSERT_EQ(naive.out, weyl::to_string(weyl::naive_mul(k, l)) + "\n");
  }
}

}  // namespace
}  // namespace weyltest
