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

// Hermite evaluation and interpolation over a balanced subproduct tree of
// the moduli (x - a_j)^{c_j}.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "weyl/field.hpp"
#include "weyl/polynomial.hpp"

namespace weyl {

template <Field F>
struct HermiteSpec {
  std::vector<ElementOf<F>> points;
  std::vector<std::size_t> multiplicities;

  std::size_t total() const noexcept {
    return std::accumulate(multiplicities.begin(), multiplicities.end(), std::size_t{0});
  }
  std::size_t max_multiplicity() const noexcept {
    return multiplicities.empty() ? 0 : *std::max_element(multiplicities.begin(), multiplicities.end());
  }

  static HermiteSpec uniform(std::vector<ElementOf<F>> points, std::size_t multiplicity) {
    HermiteSpec s{std::move(points), {}};
    s.multiplicities.assign(s.points.size(), multiplicity);
    return s;
  }

  void validate() const {
    if (points.empty()) throw PreconditionViolated("Hermite spec needs at least one point");
    if (points.size() != multiplicities.size()) {
      throw PreconditionViolated("Hermite spec: one multiplicity per point required");
    }
    for (auto c : multiplicities) {
      if (c == 0) throw PreconditionViolated("Hermite spec: multiplicities must be positive");
    }
    auto sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw DuplicatePoints();
  }
};

// Block j holds (P(a_j), P'(a_j), ..., P^{(c_j - 1)}(a_j)).
template <Field F>
struct HermiteValues {
  std::vector<std::vector<ElementOf<F>>> blocks;
  friend bool operator==(const HermiteValues&, const HermiteValues&) = default;
};

// Subproduct tree with cached division inverses. Built once per point set
// and multiplicity profile; immutable afterwards, so concurrent use is safe.
template <Field F>
class HermiteTree {
 public:
  using Element = ElementOf<F>;
  using TaylorBlocks = std::vector<std::vector<Element>>;

  enum class Mode { EvaluateOnly, EvaluateAndInterpolate };

  HermiteTree(F field, HermiteSpec<F> spec, Mode mode = Mode::EvaluateAndInterpolate)
      : field_(std::move(field)), spec_(std::move(spec)) {
    spec_.validate();
    characteristic_guard(field_.descriptor(), spec_.max_multiplicity());
    nodes_.reserve(2 * spec_.points.size());
    root_ = build(0, spec_.points.size());
    attach_inverses(root_);
    if (mode == Mode::EvaluateAndInterpolate) precompute_cofactors();
  }

  const F& field() const noexcept { return field_; }
  const HermiteSpec<F>& spec() const noexcept { return spec_; }
  const Polynomial<F>& root_modulus() const noexcept { return nodes_[root_].modulus; }
  bool can_interpolate() const noexcept { return !cofactor_inv_.empty(); }

  // Taylor coefficients P^{(s)}(a_j) / s! for s < c_j.
  TaylorBlocks taylor_expand(const Polynomial<F>& p) const {
    if (!(p.field() == field_)) throw FieldMismatch();
    TaylorBlocks out(spec_.points.size());
    const Polynomial<F>& root = nodes_[root_].modulus;
    if (p.size() >= root.size()) {
      descend(root_, poly_divrem(p, root).second, out);
    } else {
      descend(root_, p, out);
    }
    return out;
  }

  HermiteValues<F> evaluate(const Polynomial<F>& p) const {
    auto blocks = taylor_expand(p);
    const auto table = factorial_table(field_, spec_.max_multiplicity());
    for (auto& block : blocks) {
      for (std::size_t s = 0; s < block.size(); ++s) block[s] *= table.fact[s];
    }
    return {std::move(blocks)};
  }

  // Unique P with deg P < total whose Taylor coefficients at a_j are
  // taylor[j].
  Polynomial<F> interpolate_taylor(const TaylorBlocks& taylor) const {
    if (!can_interpolate()) throw PreconditionViolated("Hermite tree built without interpolation data");
    check_shape(taylor);
    return combine(root_, taylor);
  }

  Polynomial<F> interpolate(const HermiteValues<F>& values) const {
    check_shape(values.blocks);
    const auto table = factorial_table(field_, spec_.max_multiplicity());
    TaylorBlocks taylor = values.blocks;
    for (auto& block : taylor) {
      for (std::size_t s = 0; s < block.size(); ++s) block[s] *= table.inv_fact[s];
    }
    return interpolate_taylor(taylor);
  }

 private:
  struct Node {
    Polynomial<F> modulus;
    DivisorInverse<F> inverse;  // empty for the root
    std::size_t lo = 0, hi = 0;
    std::size_t left = 0, right = 0;
    bool is_leaf() const noexcept { return hi - lo == 1; }
  };

  std::size_t build(std::size_t lo, std::size_t hi) {
    Node node{Polynomial<F>(field_), {}, lo, hi, 0, 0};
    if (hi - lo == 1) {
      node.modulus = taylor_shift(Polynomial<F>::monomial(field_, spec_.multiplicities[lo]), -spec_.points[lo]);
    } else {
      const std::size_t mid = lo + (hi - lo) / 2;
      node.left = build(lo, mid);
      node.right = build(mid, hi);
      node.modulus = poly_mul(nodes_[node.left].modulus, nodes_[node.right].modulus);
    }
    nodes_.push_back(std::move(node));
    return nodes_.size() - 1;
  }

  // A child's dividend is a remainder modulo its parent, so the quotient has
  // fewer than deg(parent) - deg(child) coefficients.
  void attach_inverses(std::size_t index) {
    Node& node = nodes_[index];
    if (node.is_leaf()) return;
    const std::size_t parent_degree = node.modulus.size() - 1;
    for (std::size_t child : {node.left, node.right}) {
      Node& c = nodes_[child];
      c.inverse = divisor_inverse(c.modulus, parent_degree - (c.modulus.size() - 1));
      attach_inverses(child);
    }
  }

  Polynomial<F> reduce(const Polynomial<F>& p, const Node& node) const {
    if (p.size() < node.modulus.size()) return p;
    return poly_divrem(p, node.modulus, node.inverse).second;
  }

  void descend(std::size_t index, const Polynomial<F>& p, TaylorBlocks& out) const {
    const Node& node = nodes_[index];
    if (node.is_leaf()) {
      const auto shifted = taylor_shift(p, spec_.points[node.lo]);
      auto& block = out[node.lo];
      block.assign(shifted.coeffs().begin(), shifted.coeffs().end());
      block.resize(spec_.multiplicities[node.lo], field_.zero());
      return;
    }
    descend(node.left, reduce(p, nodes_[node.left]), out);
    descend(node.right, reduce(p, nodes_[node.right]), out);
  }

  // For every leaf j, the inverse of (M / m_j) as a power series in
  // (x - a_j) to order c_j. M / m_j mod m_j is read off M mod m_j^2.
  void precompute_cofactors() {
    cofactor_inv_.assign(spec_.points.size(), {});
    const Polynomial<F>& root = nodes_[root_].modulus;
    descend_squared(root_, root);
  }

  void descend_squared(std::size_t index, const Polynomial<F>& remainder) {
    const Node& node = nodes_[index];
    if (node.is_leaf()) {
      const std::size_t j = node.lo;
      const std::size_t c = spec_.multiplicities[j];
      auto [cofactor, rest] = poly_divrem(remainder, node.modulus);
      if (!rest.is_zero()) throw InconsistentMatrix("Hermite tree: cofactor reduction is not exact");
      const auto local = taylor_shift(cofactor, spec_.points[j]);
      std::vector<Element> series(local.coeffs().begin(), local.coeffs().end());
      series.resize(c, field_.zero());
      cofactor_inv_[j] = detail::series_inverse<F>(field_, series, c);
      return;
    }
    for (std::size_t child : {node.left, node.right}) {
      const Polynomial<F>& m = nodes_[child].modulus;
      const auto square = poly_mul(m, m);
      descend_squared(child, remainder.size() < square.size() ? remainder : poly_divrem(remainder, square).second);
    }
  }

  Polynomial<F> combine(std::size_t index, const TaylorBlocks& taylor) const {
    const Node& node = nodes_[index];
    if (node.is_leaf()) {
      const std::size_t j = node.lo;
      const std::size_t c = spec_.multiplicities[j];
      auto u = detail::convolve<F>(field_, taylor[j], cofactor_inv_[j]);
      u.resize(c, field_.zero());
      return taylor_shift(Polynomial<F>(field_, std::move(u)), -spec_.points[j]);
    }
    const auto left = combine(node.left, taylor);
    const auto right = combine(node.right, taylor);
    return poly_mul(left, nodes_[node.right].modulus) + poly_mul(right, nodes_[node.left].modulus);
  }

  void check_shape(const TaylorBlocks& blocks) const {
    if (blocks.size() != spec_.points.size()) throw PreconditionViolated("Hermite values: wrong block count");
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (blocks[j].size() != spec_.multiplicities[j]) {
        throw PreconditionViolated("Hermite values: block length differs from multiplicity");
      }
    }
  }

  F field_;
  HermiteSpec<F> spec_;
  std::vector<Node> nodes_;
  std::size_t root_ = 0;
  std::vector<std::vector<Element>> cofactor_inv_;
};

template <Field F>
HermiteValues<F> hermite_evaluate(const Polynomial<F>& p, const HermiteSpec<F>& spec) {
  return HermiteTree<F>(p.field(), spec, HermiteTree<F>::Mode::EvaluateOnly).evaluate(p);
}

template <Field F>
Polynomial<F> hermite_interpolate(const F& field, const HermiteValues<F>& values, const HermiteSpec<F>& spec) {
  return HermiteTree<F>(field, spec).interpolate(values);
}

}  // namespace weyl
