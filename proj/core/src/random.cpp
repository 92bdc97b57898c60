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

#include "weyl/random.hpp"

#include <limits>
#include <stdexcept>

namespace weyl {

Rng Rng::derived(std::initializer_list<std::uint64_t> parts) {
  // splitmix64 finaliser folded over the parts.
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto v : parts) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= h >> 30;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 27;
    h *= 0x94d049bb133111ebULL;
    h ^= h >> 31;
  }
  return Rng(h);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: empty range");
  // Largest multiple of n representable; reject draws at or above it.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("Rng::between: empty range");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span));
}

Rational random_element(const RationalField&, Rng& rng) {
  const auto num = rng.between(-20, 20);
  const auto den = rng.between(1, 9);
  return Rational(mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))));
}

ModInt random_element(const PrimeField& field, Rng& rng) { return field.from_residue(rng.below(field.modulus())); }

}  // namespace weyl
