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

#include <algorithm>
#include <chrono>
#include <type_traits>
#include <ostream>
#include <variant>

#include "weyl/weyl.hpp"
#include "weylcli/cli.hpp"

namespace weylcli {

namespace {

template <weyl::Field F>
std::int64_t time_once(const weyl::DiffOperator<F>& k, const weyl::DiffOperator<F>& l, weyl::Algorithm algorithm) {
  const auto start = std::chrono::steady_clock::now();
  const auto product = weyl::mul(k, l, algorithm);
  const auto stop = std::chrono::steady_clock::now();
  // Keeps the product observable so the call is not elided.
  if (product.order_bound() == static_cast<std::size_t>(-1)) return -1;
  return std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
}

std::int64_t median(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

}  // namespace

std::vector<weyl::Bidegree> default_bench_profiles() {
  return {{256, 4}, {512, 4}, {1024, 4}, {2048, 4}, {4096, 4}};
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  if (config.reps < 3) throw weyl::PreconditionViolated("bench needs at least 3 repetitions");
  const bool fast = std::any_of(config.algorithms.begin(), config.algorithms.end(),
                                [](weyl::Algorithm a) { return a != weyl::Algorithm::Naive; });
  if (fast) {
    std::size_t bound = 0;
    for (const auto p : config.profiles) bound = std::max({bound, p.degree, p.order});
    weyl::characteristic_guard(config.field, 8 * bound);
  }

  // Repetitions are interleaved across rows so that slow periods on a busy
  // machine spread over every row instead of skewing one of them.
  std::vector<BenchRecord> records;
  const auto any = weyl::make_field(config.field);
  std::visit(
      [&](const auto& field) {
        using Op = std::decay_t<decltype(weyl::DiffOperator(field))>;
        struct Row {
          weyl::Algorithm algorithm;
          weyl::Bidegree profile;
          Op k, l;
          std::vector<std::int64_t> samples;
        };
        std::vector<Row> rows;
        for (const auto algorithm : config.algorithms) {
          for (const auto profile : config.profiles) {
            auto rng = weyl::Rng::derived({config.seed, profile.degree, profile.order});
            auto k = weyl::random_operator(field, profile, rng);
            auto l = weyl::random_operator(field, profile, rng);
            rows.push_back({algorithm, profile, std::move(k), std::move(l), {}});
          }
        }
        for (auto& row : rows) time_once(row.k, row.l, row.algorithm);  // warm-up, discarded
        for (std::size_t i = 0; i < config.reps; ++i) {
          for (auto& row : rows) row.samples.push_back(time_once(row.k, row.l, row.algorithm));
        }
        for (auto& row : rows) {
          records.push_back({std::string(weyl::to_string(row.algorithm)), row.profile.degree, row.profile.order,
                             config.field.to_string(), config.reps, median(std::move(row.samples))});
        }
      },
      any);
  return records;
}

void write_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
  out << "algorithm,d,r,field,reps,median_ns\n";
  for (const auto& r : records) {
    out << r.algorithm << ',' << r.d << ',' << r.r << ',' << r.field << ',' << r.reps << ',' << r.median_ns << '\n';
  }
}

}  // namespace weylcli
