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

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weyl/diff_operator.hpp"
#include "weyl/field.hpp"
#include "weyl/weyl_mul.hpp"

namespace weylcli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCharacteristic = 3;

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "8x8,16x4" -> {(8, 8), (16, 4)}; each item is <degree>x<order>.
std::vector<weyl::Bidegree> parse_profiles(std::string_view text);
std::string format_profile(weyl::Bidegree b);

struct VerifyConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 25;
  std::vector<weyl::Bidegree> profiles;
  std::vector<weyl::FieldDescriptor> fields;
  // Test hook: the named check gets a perturbed left-hand side.
  std::optional<std::string> fault;
};

struct VerifyResult {
  std::size_t checks = 0;
  std::size_t failures = 0;
};

std::vector<weyl::Bidegree> default_verify_profiles();
std::vector<weyl::FieldDescriptor> default_verify_fields();

// Writes the report to `out`; the report depends only on `config`.
VerifyResult run_verify(const VerifyConfig& config, std::ostream& out);

struct BenchRecord {
  std::string algorithm;
  std::size_t d = 0;
  std::size_t r = 0;
  std::string field;
  std::size_t reps = 0;
  std::int64_t median_ns = 0;
};

struct BenchConfig {
  std::uint64_t seed = 0;
  std::size_t reps = 5;
  std::vector<weyl::Bidegree> profiles;
  weyl::FieldDescriptor field = weyl::FieldDescriptor::prime(2147483647);
  std::vector<weyl::Algorithm> algorithms = {weyl::Algorithm::Naive, weyl::Algorithm::Fast};
};

std::vector<weyl::Bidegree> default_bench_profiles();

std::vector<BenchRecord> run_bench(const BenchConfig& config);
void write_csv(const std::vector<BenchRecord>& records, std::ostream& out);

}  // namespace weylcli
