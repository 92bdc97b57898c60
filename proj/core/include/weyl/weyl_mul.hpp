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

// Fast multiplication in the Weyl algebra K[x, D] by evaluation at
// exponential polynomials x^m e^{a x}.
//
// For r >= d the operators act block-diagonally on
//   K[x]_k e^{a_0 x} + ... + K[x]_k e^{a_{p-1} x},  p = ceil(r / d),
// where block j is the matrix of L(x, D + a_j) on K[x]_k. Evaluation is one
// Hermite evaluation per x-coefficient, the inner step is p small matrix
// products, and interpolation is the inverse chain. For d > r the product
// is computed on reflected operators.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weyl/detail/parallel.hpp"
#include "weyl/diff_operator.hpp"
#include "weyl/hermite.hpp"
#include "weyl/matrix.hpp"
#include "weyl/polynomial.hpp"
#include "weyl/reflection.hpp"
#include "weyl/settings.hpp"

namespace weyl {

// Matrix of L : K[x]_k -> K[x]_{k+dx} in the monomial bases; column m holds
// the coefficients of L(x^m).
template <Field F>
struct EvalMatrix {
  Matrix<F> mat;
  std::size_t k = 0;
  std::size_t dx = 0;
};

// Evaluation points and truncation orders for one fast multiplication.
template <Field F>
struct BlockEvalPlan {
  std::vector<ElementOf<F>> points;
  std::size_t dhat = 1;
  std::size_t trunc_left = 3;
  std::size_t trunc_right = 2;
  std::size_t trunc_out = 2;

  std::size_t count() const noexcept { return points.size(); }

  // Points 0, 1, ..., p-1 with p = ceil(r / dhat), dhat = max(d, 1), and
  // truncation orders 3 dhat, 2 dhat, 2 dhat.
  static BlockEvalPlan for_bidegree(const F& field, std::size_t d, std::size_t r) {
    BlockEvalPlan plan;
    plan.dhat = std::max<std::size_t>(d, 1);
    const std::size_t p = std::max<std::size_t>((r + plan.dhat - 1) / plan.dhat, 1);
    characteristic_guard(field.descriptor(), p);
    plan.points.reserve(p);
    for (std::size_t j = 0; j < p; ++j) plan.points.push_back(field.from_integer(static_cast<std::int64_t>(j)));
    plan.trunc_left = 3 * plan.dhat;
    plan.trunc_right = 2 * plan.dhat;
    plan.trunc_out = 2 * plan.dhat;
    return plan;
  }

  HermiteSpec<F> spec(std::size_t trunc) const { return HermiteSpec<F>::uniform(points, trunc); }
};

// L(x, D + a) by a Taylor shift of every x-coefficient. Reference path.
template <Field F>
DiffOperator<F> conjugate_exp(const DiffOperator<F>& l, const ElementOf<F>& alpha) {
  const F& field = l.field();
  if (l.is_zero()) return l;
  characteristic_guard(field.descriptor(), l.order_bound());
  const std::size_t r = l.order_bound(), d = l.degree_bound();
  std::vector<ElementOf<F>> grid(r * d, field.zero());
  for (std::size_t j = 0; j < d; ++j) {
    const auto shifted = taylor_shift(l.d_coefficient(j), alpha);
    for (std::size_t i = 0; i < shifted.size(); ++i) grid[i * d + j] = shifted.coeffs()[i];
  }
  return DiffOperator<F>(field, r, d, std::move(grid));
}

// L(x, D + a_j) mod D^trunc for every point of the tree, where trunc is the
// tree's (uniform) multiplicity: the Taylor expansion of each
// x-coefficient L_j(D) at D = a_j.
template <Field F>
std::vector<DiffOperator<F>> truncated_conjugates(const DiffOperator<F>& l, const HermiteTree<F>& tree) {
  using E = ElementOf<F>;
  const F& field = l.field();
  const auto& spec = tree.spec();
  const std::size_t p = spec.points.size();
  const std::size_t trunc = spec.multiplicities.front();
  const std::size_t d = l.degree_bound();
  std::vector<std::vector<E>> grids(p, std::vector<E>(trunc * d, field.zero()));
  detail::parallel_for(d, [&](std::size_t j) {
    const auto taylor = tree.taylor_expand(l.d_coefficient(j));
    for (std::size_t b = 0; b < p; ++b) {
      for (std::size_t s = 0; s < trunc; ++s) grids[b][s * d + j] = taylor[b][s];
    }
  });
  std::vector<DiffOperator<F>> out;
  out.reserve(p);
  for (auto& g : grids) out.emplace_back(field, trunc, d, std::move(g));
  return out;
}

template <Field F>
std::vector<DiffOperator<F>> truncated_conjugates(const DiffOperator<F>& l, const BlockEvalPlan<F>& plan,
                                                  std::size_t trunc) {
  const HermiteTree<F> tree(l.field(), plan.spec(trunc), HermiteTree<F>::Mode::EvaluateOnly);
  return truncated_conjugates(l, tree);
}

// Diagonal method: entry (m + t, m) is f_t(m) = sum_i L_{i, t+i} m^(i)
// (falling factorial), so each diagonal is one falling_to_values call.
// `dx` may pad the x-degree bound beyond L's own.
template <Field F>
EvalMatrix<F> phi_matrix(const DiffOperator<F>& l, std::size_t k, std::optional<std::size_t> dx = {}) {
  using E = ElementOf<F>;
  const F& field = l.field();
  const std::size_t d = l.degree_bound();
  const std::size_t rows_dx = dx.value_or(d);
  if (rows_dx < d) throw PreconditionViolated("phi_matrix: dx below the operator's degree bound");
  characteristic_guard(field.descriptor(), k + rows_dx);
  EvalMatrix<F> result{Matrix<F>(field, k + rows_dx, k), k, rows_dx};
  if (l.is_zero() || k == 0) return result;

  const auto r = static_cast<std::int64_t>(std::min(l.order_bound(), k));
  for (std::int64_t t = 1 - r; t < static_cast<std::int64_t>(d); ++t) {
    const auto first = static_cast<std::size_t>(std::max<std::int64_t>(0, -t));
    std::vector<E> a(static_cast<std::size_t>(r), field.zero());
    bool any = false;
    for (std::size_t i = first; i < static_cast<std::size_t>(r); ++i) {
      const auto j = static_cast<std::size_t>(t + static_cast<std::int64_t>(i));
      if (j >= d) break;
      a[i] = l.at(i, j);
      any = any || !a[i].is_zero();
    }
    if (!any) continue;
    const auto values = falling_to_values<F>(field, a, k);
    for (std::size_t m = first; m < k; ++m) {
      result.mat(static_cast<std::size_t>(static_cast<std::int64_t>(m) + t), m) = values[m];
    }
  }
  return result;
}

// Recovers the unique operator with x-degree < dx and order < rbound from
// its matrix on K[x]_k (k = columns >= rbound). Rows beyond k + dx - 1 and
// any coefficient outside those bounds must vanish.
template <Field F>
DiffOperator<F> phi_inverse(const Matrix<F>& m, std::size_t dx, std::size_t rbound) {
  using E = ElementOf<F>;
  const F& field = m.field();
  const std::size_t k = m.cols(), rows = m.rows();
  if (k < rbound) throw PreconditionViolated("phi_inverse: need at least rbound columns");
  if (k > 0 && rows + 1 < k + dx) throw ShapeMismatch("phi_inverse: too few rows for the degree bound");
  characteristic_guard(field.descriptor(), k + dx);
  std::vector<E> grid(rbound * dx, field.zero());
  if (k == 0) return DiffOperator<F>(field, rbound, dx, std::move(grid));

  for (std::int64_t t = 1 - static_cast<std::int64_t>(k); t < static_cast<std::int64_t>(rows); ++t) {
    const auto first = static_cast<std::size_t>(std::max<std::int64_t>(0, -t));
    std::vector<E> v(k, field.zero());
    bool any = false;
    for (std::size_t col = first; col < k; ++col) {
      const auto row = static_cast<std::size_t>(static_cast<std::int64_t>(col) + t);
      if (row >= rows) break;
      v[col] = m(row, col);
      any = any || !v[col].is_zero();
    }
    if (!any) continue;
    if (t >= static_cast<std::int64_t>(dx)) {
      throw InconsistentMatrix("phi_inverse: nonzero entries beyond the degree bound");
    }
    const auto a = values_to_falling<F>(field, v);
    for (std::size_t i = 0; i < k; ++i) {
      if (a[i].is_zero()) continue;
      const std::int64_t j = t + static_cast<std::int64_t>(i);
      if (j < 0 || static_cast<std::size_t>(j) >= dx || i >= rbound) throw InconsistentMatrix("phi_inverse: matrix is not the image of an operator");
      grid[i * dx + static_cast<std::size_t>(j)] = a[i];
    }
  }
  return DiffOperator<F>(field, rbound, dx, std::move(grid));
}

template <Field F>
DiffOperator<F> phi_inverse(const EvalMatrix<F>& m, std::size_t dx, std::size_t rbound) {
  return phi_inverse(m.mat, dx, rbound);
}

// Block j is phi_matrix(L(x, D + a_j) mod D^trunc, k) with trunc the tree's
// multiplicity.
template <Field F>
BlockDiagonalMatrix<F> block_phi(const DiffOperator<F>& l, const HermiteTree<F>& tree, std::size_t k,
                                 std::optional<std::size_t> dx = {}) {
  if (tree.spec().multiplicities.front() < k) {
    throw PreconditionViolated("block_phi: truncation order must be at least k");
  }
  const auto conj = truncated_conjugates(l, tree);
  const std::size_t width = dx.value_or(l.degree_bound());
  std::vector<Matrix<F>> blocks(conj.size(), Matrix<F>(l.field(), 0, 0));
  detail::parallel_for(conj.size(), [&](std::size_t b) { blocks[b] = phi_matrix(conj[b], k, width).mat; });
  return {std::move(blocks)};
}

template <Field F>
BlockDiagonalMatrix<F> block_phi(const DiffOperator<F>& l, const BlockEvalPlan<F>& plan, std::size_t k,
                                 std::size_t trunc) {
  const HermiteTree<F> tree(l.field(), plan.spec(trunc), HermiteTree<F>::Mode::EvaluateOnly);
  return block_phi(l, tree, k);
}

// Inverse of block_phi for an interpolation-capable tree whose multiplicity
// is the output truncation order.
template <Field F>
DiffOperator<F> block_phi_inverse(const BlockDiagonalMatrix<F>& m, const HermiteTree<F>& tree, std::size_t dx,
                                  std::size_t rbound) {
  using E = ElementOf<F>;
  const F& field = tree.field();
  const auto& spec = tree.spec();
  const std::size_t p = spec.points.size();
  const std::size_t trunc = spec.multiplicities.front();
  if (m.block_count() != p) throw BlockCountMismatch("block_phi_inverse: one block per point required");
  if (p * trunc < rbound) throw PreconditionViolated("block_phi_inverse: p * trunc_out must reach rbound");
  for (const auto& block : m.blocks) {
    if (block.cols() < trunc) throw PreconditionViolated("block_phi_inverse: blocks narrower than trunc_out");
  }

  std::vector<DiffOperator<F>> local(p, DiffOperator<F>(field));
  detail::parallel_for(p, [&](std::size_t b) {
    local[b] = phi_inverse(m.blocks[b], dx, m.blocks[b].cols());
  });

  std::vector<E> grid(rbound * dx, field.zero());
  detail::parallel_for(dx, [&](std::size_t j) {
    typename HermiteTree<F>::TaylorBlocks taylor(p, std::vector<E>(trunc, field.zero()));
    for (std::size_t b = 0; b < p; ++b) {
      for (std::size_t s = 0; s < trunc; ++s) taylor[b][s] = local[b].coeff(s, j);
    }
    const auto coeff = tree.interpolate_taylor(taylor);
    if (coeff.size() > rbound) {
      throw InconsistentMatrix("block_phi_inverse: interpolated order exceeds rbound");
    }
    for (std::size_t i = 0; i < coeff.size(); ++i) grid[i * dx + j] = coeff.coeffs()[i];
  });
  return DiffOperator<F>(field, rbound, dx, std::move(grid));
}

template <Field F>
DiffOperator<F> block_phi_inverse(const BlockDiagonalMatrix<F>& m, const BlockEvalPlan<F>& plan, std::size_t dx,
                                  std::size_t rbound) {
  if (plan.points.empty()) throw PreconditionViolated("block_phi_inverse: empty plan");
  const F field = [&] {
    for (const auto& block : m.blocks) return block.field();
    throw PreconditionViolated("block_phi_inverse: no blocks");
  }();
  const HermiteTree<F> tree(field, plan.spec(plan.trunc_out));
  return block_phi_inverse(m, tree, dx, rbound);
}

namespace detail {

inline Bidegree joint_bidegree(Bidegree a, Bidegree b) noexcept {
  return {std::max(a.degree, b.degree), std::max(a.order, b.order)};
}

}  // namespace detail

// Product for joint bidegree (d, r) with r >= d >= 1.
template <Field F>
DiffOperator<F> mul_tall(const DiffOperator<F>& k, const DiffOperator<F>& l) {
  if (!(k.field() == l.field())) throw FieldMismatch();
  const F& field = k.field();
  if (k.is_zero() || l.is_zero()) return DiffOperator<F>(field);
  const auto [d, r] = detail::joint_bidegree(k.bidegree(), l.bidegree());
  if (r < d) throw PreconditionViolated("mul_tall requires order bound >= degree bound");
  characteristic_guard(field.descriptor(), 8 * std::max(d, r));

  const auto plan = BlockEvalPlan<F>::for_bidegree(field, d, r);
  const std::size_t dhat = plan.dhat;
  const HermiteTree<F> left_tree(field, plan.spec(plan.trunc_left), HermiteTree<F>::Mode::EvaluateOnly);
  const HermiteTree<F> right_tree(field, plan.spec(plan.trunc_right));

  // A blocks are 4d x 3d, B blocks 3d x 2d.
  const auto a = block_phi(k, left_tree, 3 * dhat, dhat);
  const auto b = block_phi(l, right_tree, 2 * dhat, dhat);
  const auto c = block_mul(a, b);
  return block_phi_inverse(c, right_tree, 2 * d - 1, 2 * r - 1);
}

// Product for joint bidegree (d, r) with d > r >= 1, through phi.
template <Field F>
DiffOperator<F> mul_wide(const DiffOperator<F>& k, const DiffOperator<F>& l) {
  if (!(k.field() == l.field())) throw FieldMismatch();
  if (k.is_zero() || l.is_zero()) return DiffOperator<F>(k.field());
  const auto [d, r] = detail::joint_bidegree(k.bidegree(), l.bidegree());
  if (d <= r) throw PreconditionViolated("mul_wide requires degree bound > order bound");
  characteristic_guard(k.field().descriptor(), 8 * std::max(d, r));
  return reflect_inverse(mul_tall(reflect_fast(k), reflect_fast(l)));
}

enum class Algorithm { Auto, Naive, Fast };

inline Algorithm parse_algorithm(std::string_view text) {
  if (text == "auto") return Algorithm::Auto;
  if (text == "naive") return Algorithm::Naive;
  if (text == "fast") return Algorithm::Fast;
  throw ParseError("unknown algorithm '" + std::string(text) + "' (expected naive, fast or auto)");
}

inline std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::Naive: return "naive";
    case Algorithm::Fast: return "fast";
    case Algorithm::Auto: break;
  }
  return "auto";
}

template <Field F>
DiffOperator<F> mul(const DiffOperator<F>& k, const DiffOperator<F>& l, Algorithm algorithm = Algorithm::Auto) {
  if (!(k.field() == l.field())) throw FieldMismatch();
  if (k.is_zero() || l.is_zero()) return DiffOperator<F>(k.field());
  if (algorithm == Algorithm::Naive) return naive_mul(k, l);

  const auto [d, r] = detail::joint_bidegree(k.bidegree(), l.bidegree());
  const auto& cfg = settings();
  if (algorithm == Algorithm::Auto) {
    if (std::min(d, r) <= cfg.naive_min_order || d * r <= cfg.naive_max_area) return naive_mul(k, l);
    const auto desc = k.field().descriptor();
    if (!desc.is_rational() && desc.modulus <= 8 * std::max(d, r) && d * r <= cfg.naive_fallback_area) {
      return naive_mul(k, l);
    }
  }
  return r >= d ? mul_tall(k, l) : mul_wide(k, l);
}

}  // namespace weyl
