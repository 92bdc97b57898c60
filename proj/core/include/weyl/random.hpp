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

// Portable pseudo-random generation. Bounded draws use rejection on the raw
// 64-bit output of mt19937_64, so a seed yields the same stream on every
// platform and standard library.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "weyl/diff_operator.hpp"
#include "weyl/field.hpp"
#include "weyl/polynomial.hpp"

namespace weyl {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Seed derived from a tuple of integers, for independent per-trial streams.
  static Rng derived(std::initializer_list<std::uint64_t> parts);

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

// Rationals: numerator in [-20, 20], denominator in [1, 9]. Prime fields:
// uniform residue.
Rational random_element(const RationalField& field, Rng& rng);
ModInt random_element(const PrimeField& field, Rng& rng);

template <Field F>
Polynomial<F> random_polynomial(const F& field, std::size_t size, Rng& rng) {
  std::vector<ElementOf<F>> c;
  c.reserve(size);
  for (std::size_t i = 0; i < size; ++i) c.push_back(random_element(field, rng));
  return Polynomial<F>(field, std::move(c));
}

// Dense operator with `bidegree.order` rows and `bidegree.degree` columns,
// filled row by row.
template <Field F>
DiffOperator<F> random_operator(const F& field, Bidegree bidegree, Rng& rng) {
  std::vector<ElementOf<F>> grid;
  grid.reserve(bidegree.order * bidegree.degree);
  for (std::size_t n = 0; n < bidegree.order * bidegree.degree; ++n) grid.push_back(random_element(field, rng));
  return DiffOperator<F>(field, bidegree.order, bidegree.degree, std::move(grid));
}

}  // namespace weyl
