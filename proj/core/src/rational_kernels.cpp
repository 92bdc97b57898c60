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

#include "weyl/detail/rational_kernels.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>

namespace weyl::detail {
namespace {

// Integer numerators over a common denominator.
struct Cleared {
  std::vector<mpz_class> num;
  mpz_class den{1};
  std::size_t bits = 0;
};

Cleared clear_denominators(std::span<const Rational> a) {
  Cleared c;
  for (const auto& x : a) mpz_lcm(c.den.get_mpz_t(), c.den.get_mpz_t(), x.value().get_den_mpz_t());
  c.num.reserve(a.size());
  for (const auto& x : a) {
    mpz_class n;
    mpz_divexact(n.get_mpz_t(), c.den.get_mpz_t(), x.value().get_den_mpz_t());
    n *= x.value().get_num();
    c.bits = std::max(c.bits, mpz_sizeinbase(n.get_mpz_t(), 2));
    c.num.push_back(std::move(n));
  }
  return c;
}

// sum_i v[i] * 2^(w i), signed.
mpz_class pack(std::span<const mpz_class> v, std::size_t w) {
  if (v.size() == 1) return v[0];
  const std::size_t h = v.size() / 2;
  mpz_class high = pack(v.subspan(h), w);
  mpz_mul_2exp(high.get_mpz_t(), high.get_mpz_t(), w * h);
  return high + pack(v.first(h), w);
}

// Inverse of pack when every digit satisfies |digit| < 2^(w-1).
void unpack(const mpz_class& x, std::size_t w, std::span<mpz_class> out) {
  if (out.size() == 1) {
    out[0] = x;
    return;
  }
  const std::size_t h = out.size() / 2;
  const std::size_t shift = w * h;
  mpz_class low, high;
  mpz_fdiv_r_2exp(low.get_mpz_t(), x.get_mpz_t(), shift);
  mpz_fdiv_q_2exp(high.get_mpz_t(), x.get_mpz_t(), shift);
  if (mpz_sizeinbase(low.get_mpz_t(), 2) >= shift && mpz_sgn(low.get_mpz_t()) != 0) {
    // low >= 2^(shift - 1): take the balanced representative.
    mpz_class base;
    mpz_setbit(base.get_mpz_t(), shift);
    low -= base;
    high += 1;
  }
  unpack(low, w, out.first(h));
  unpack(high, w, out.subspan(h));
}

}  // namespace

std::vector<Rational> mul_rational_kronecker(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.empty() || b.empty()) return {};
  const Cleared ca = clear_denominators(a), cb = clear_denominators(b);
  const std::size_t terms = std::min(a.size(), b.size());
  const std::size_t w = ca.bits + cb.bits + static_cast<std::size_t>(std::bit_width(terms)) + 2;
  const mpz_class product = pack(ca.num, w) * pack(cb.num, w);

  std::vector<mpz_class> digits(a.size() + b.size() - 1);
  unpack(product, w, digits);
  const mpz_class den = ca.den * cb.den;
  std::vector<Rational> out;
  out.reserve(digits.size());
  for (auto& d : digits) out.emplace_back(mpq_class(std::move(d), den));
  return out;
}

}  // namespace weyl::detail
