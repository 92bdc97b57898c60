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

// Micro-benchmarks for the main kernels. Run with
//   weyl_benchmarks --benchmark_filter=Mul
// The CLI `bench` command produces the CSV scaling table instead.

#include <benchmark/benchmark.h>

#include "weyl/weyl.hpp"

namespace {

const weyl::PrimeField kField(2147483647);

void BM_MulFastTall(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto r = static_cast<std::size_t>(state.range(1));
  weyl::Rng rng(1);
  const auto k = weyl::random_operator(kField, {d, r}, rng);
  const auto l = weyl::random_operator(kField, {d, r}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(weyl::mul(k, l, weyl::Algorithm::Fast));
}
BENCHMARK(BM_MulFastTall)->Args({16, 64})->Args({32, 128})->Args({64, 64})->Unit(benchmark::kMillisecond);

void BM_MulFastWide(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  weyl::Rng rng(2);
  const auto k = weyl::random_operator(kField, {d, 4}, rng);
  const auto l = weyl::random_operator(kField, {d, 4}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(weyl::mul(k, l, weyl::Algorithm::Fast));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MulFastWide)->RangeMultiplier(2)->Range(256, 2048)->Complexity()->Unit(benchmark::kMillisecond);

void BM_MulNaive(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  weyl::Rng rng(2);
  const auto k = weyl::random_operator(kField, {d, 4}, rng);
  const auto l = weyl::random_operator(kField, {d, 4}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(weyl::naive_mul(k, l));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MulNaive)->RangeMultiplier(2)->Range(256, 1024)->Complexity()->Unit(benchmark::kMillisecond);

void BM_ReflectFast(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  weyl::Rng rng(3);
  const auto l = weyl::random_operator(kField, {n, n}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(weyl::reflect_fast(l));
}
BENCHMARK(BM_ReflectFast)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);

void BM_PolyMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  weyl::Rng rng(4);
  const auto a = weyl::random_polynomial(kField, n, rng);
  const auto b = weyl::random_polynomial(kField, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PolyMul)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_HermiteRoundTrip(benchmark::State& state) {
  const auto points = static_cast<std::size_t>(state.range(0));
  std::vector<weyl::ModInt> alpha;
  for (std::size_t j = 0; j < points; ++j) alpha.push_back(kField.from_integer(static_cast<std::int64_t>(j)));
  const auto spec = weyl::HermiteSpec<weyl::PrimeField>::uniform(alpha, 8);
  const weyl::HermiteTree<weyl::PrimeField> tree(kField, spec);
  weyl::Rng rng(5);
  const auto p = weyl::random_polynomial(kField, spec.total(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(tree.interpolate(tree.evaluate(p)));
}
BENCHMARK(BM_HermiteRoundTrip)->RangeMultiplier(4)->Range(4, 256)->Unit(benchmark::kMillisecond);

void BM_MatMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  weyl::Rng rng(6);
  weyl::Matrix<weyl::PrimeField> a(kField, n, n), b(kField, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = weyl::random_element(kField, rng);
      b(i, j) = weyl::random_element(kField, rng);
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(weyl::mat_mul(a, b));
}
BENCHMARK(BM_MatMul)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
