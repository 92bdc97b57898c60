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

// The reflection automorphism phi(x) = D, phi(D) = -x of the Weyl algebra,
// and its inverse phi^{-1} = phi o psi.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "weyl/diff_operator.hpp"
#include "weyl/polynomial.hpp"

namespace weyl {

// Reference path: sum_{i,j} L_{i,j} D^j (-x)^i expanded with naive_mul.
template <Field F>
DiffOperator<F> reflect_naive(const DiffOperator<F>& l) {
  const F& field = l.field();
  DiffOperator<F> result(field);
  for (std::size_t i = 0; i < l.order_bound(); ++i) {
    for (std::size_t j = 0; j < l.degree_bound(); ++j) {
      const auto& c = l.at(i, j);
      if (c.is_zero()) continue;
      const auto d_power = DiffOperator<F>::monomial(field, j, 0, field.one());
      const auto x_power = DiffOperator<F>::monomial(field, 0, i, i % 2 == 0 ? field.one() : -field.one());
      result += c * naive_mul(d_power, x_power);
    }
  }
  return result;
}

// Fast reflection by Taylor shifts along diagonals. With p~_{i,j} =
// (-1)^i L_{i,j} (i = D-power, j = x-power), the output coefficient q of
// x^a D^b satisfies
//   a! q = sum_k C(b+k, k) (a+k)! p~_{a+k, b+k},
// equivalently b! q = sum_k C(a+k, k) (b+k)! p~_{a+k, b+k}. Along a fixed
// diagonal this is a Taylor shift by 1 of a polynomial whose length is
// min(d, r), so the whole map costs min(d M(r), r M(d)).
template <Field F>
DiffOperator<F> reflect_fast(const DiffOperator<F>& l) {
  using E = ElementOf<F>;
  const F& field = l.field();
  if (l.is_zero()) return l;
  const std::size_t r = l.order_bound(), d = l.degree_bound();
  characteristic_guard(field.descriptor(), d + r);
  const auto table = factorial_table(field, std::max(d, r));
  auto signed_coeff = [&](std::size_t i, std::size_t j) {
    return i % 2 == 0 ? l.at(i, j) : -l.at(i, j);
  };

  // Output: D-power b < d rows, x-power a < r columns.
  std::vector<E> out(d * r, field.zero());
  const E one = field.one();
  if (r >= d) {
    // Polynomials in K[x]_d indexed by the input x-power j = i + delta.
    for (std::int64_t delta = 1 - static_cast<std::int64_t>(r); delta < static_cast<std::int64_t>(d); ++delta) {
      std::vector<E> f(d, field.zero());
      bool any = false;
      for (std::size_t j = static_cast<std::size_t>(std::max<std::int64_t>(delta, 0)); j < d; ++j) {
        const auto i = static_cast<std::size_t>(static_cast<std::int64_t>(j) - delta);
        if (i >= r) break;
        f[j] = signed_coeff(i, j) * table.fact[i];
        any = any || !f[j].is_zero();
      }
      if (!any) continue;
      const auto g = taylor_shift(Polynomial<F>(field, std::move(f)), one);
      for (std::size_t s = static_cast<std::size_t>(std::max<std::int64_t>(delta, 0)); s < g.size(); ++s) {
        const auto a = static_cast<std::size_t>(static_cast<std::int64_t>(s) - delta);
        if (a >= r) break;
        out[s * r + a] = g.coeffs()[s] * table.inv_fact[a];
      }
    }
  } else {
    // Polynomials in K[x]_r indexed by the input D-power i = j + delta.
    for (std::int64_t delta = 1 - static_cast<std::int64_t>(d); delta < static_cast<std::int64_t>(r); ++delta) {
      std::vector<E> f(r, field.zero());
      bool any = false;
      for (std::size_t i = static_cast<std::size_t>(std::max<std::int64_t>(delta, 0)); i < r; ++i) {
        const auto j = static_cast<std::size_t>(static_cast<std::int64_t>(i) - delta);
        if (j >= d) break;
        f[i] = signed_coeff(i, j) * table.fact[j];
        any = any || !f[i].is_zero();
      }
      if (!any) continue;
      const auto g = taylor_shift(Polynomial<F>(field, std::move(f)), one);
      for (std::size_t s = static_cast<std::size_t>(std::max<std::int64_t>(delta, 0)); s < g.size(); ++s) {
        const auto b = static_cast<std::size_t>(static_cast<std::int64_t>(s) - delta);
        if (b >= d) break;
        out[b * r + s] = g.coeffs()[s] * table.inv_fact[b];
      }
    }
  }
  return DiffOperator<F>(field, d, r, std::move(out));
}

template <Field F>
DiffOperator<F> reflect_inverse(const DiffOperator<F>& l) {
  return reflect_fast(psi(l));
}

}  // namespace weyl
