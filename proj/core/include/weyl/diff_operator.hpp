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

// Linear differential operators sum_{i,j} L_{i,j} x^j D^i in canonical form
// (x on the left, D = d/dx on the right).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "weyl/field.hpp"
#include "weyl/polynomial.hpp"

namespace weyl {

// Strict bounds: x-degree < degree, D-order < order. (0, 0) for zero.
struct Bidegree {
  std::size_t degree = 0;
  std::size_t order = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

template <Field F>
class DiffOperator {
 public:
  using Element = ElementOf<F>;

  explicit DiffOperator(F field) : field_(std::move(field)) {}

  // `grid` is row-major with `order` rows (D-power i) and `degree` columns
  // (x-power j). Trailing zero rows and columns are trimmed.
  DiffOperator(F field, std::size_t order, std::size_t degree, std::vector<Element> grid)
      : field_(std::move(field)), order_(order), degree_(degree), grid_(std::move(grid)) {
    if (grid_.size() != order_ * degree_) throw ShapeMismatch("operator grid size differs from order * degree");
    trim();
  }

  // Sum of c * x^j * D^i over (i, j, c) triples.
  static DiffOperator from_terms(const F& field, const std::vector<std::tuple<std::size_t, std::size_t, Element>>& terms) {
    std::size_t r = 0, d = 0;
    for (const auto& [i, j, c] : terms) {
      r = std::max(r, i + 1);
      d = std::max(d, j + 1);
    }
    std::vector<Element> grid(r * d, field.zero());
    for (const auto& [i, j, c] : terms) grid[i * d + j] += c;
    return DiffOperator(field, r, d, std::move(grid));
  }

  static DiffOperator scalar(const F& field, Element c) { return from_terms(field, {{0, 0, std::move(c)}}); }
  // c * x^j * D^i
  static DiffOperator monomial(const F& field, std::size_t i, std::size_t j, Element c) {
    return from_terms(field, {{i, j, std::move(c)}});
  }
  static DiffOperator from_polynomial(const Polynomial<F>& p) {
    std::vector<Element> grid(p.coeffs().begin(), p.coeffs().end());
    return DiffOperator(p.field(), grid.empty() ? 0 : 1, grid.size(), std::move(grid));
  }

  const F& field() const noexcept { return field_; }
  std::size_t order_bound() const noexcept { return order_; }
  std::size_t degree_bound() const noexcept { return degree_; }
  Bidegree bidegree() const noexcept { return {degree_, order_}; }
  bool is_zero() const noexcept { return grid_.empty(); }
  std::span<const Element> grid() const noexcept { return grid_; }

  Element coeff(std::size_t i, std::size_t j) const {
    return (i < order_ && j < degree_) ? grid_[i * degree_ + j] : field_.zero();
  }
  const Element& at(std::size_t i, std::size_t j) const { return grid_[i * degree_ + j]; }

  // L_i(x) = sum_j L_{i,j} x^j.
  Polynomial<F> x_coefficient(std::size_t i) const {
    if (i >= order_) return Polynomial<F>(field_);
    return Polynomial<F>(field_, {grid_.begin() + static_cast<std::ptrdiff_t>(i * degree_),
                                  grid_.begin() + static_cast<std::ptrdiff_t>((i + 1) * degree_)});
  }

  // sum_i L_{i,j} y^i, the coefficient of x^j as a polynomial in D.
  Polynomial<F> d_coefficient(std::size_t j) const {
    if (j >= degree_) return Polynomial<F>(field_);
    std::vector<Element> c;
    c.reserve(order_);
    for (std::size_t i = 0; i < order_; ++i) c.push_back(grid_[i * degree_ + j]);
    return Polynomial<F>(field_, std::move(c));
  }

  DiffOperator& operator+=(const DiffOperator& o) { return accumulate(o, false); }
  DiffOperator& operator-=(const DiffOperator& o) { return accumulate(o, true); }
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  friend DiffOperator operator*(const Element& c, DiffOperator a) {
    for (auto& e : a.grid_) e = c * e;
    a.trim();
    return a;
  }
  friend DiffOperator operator*(DiffOperator a, const Element& c) { return c * std::move(a); }
  friend bool operator==(const DiffOperator& a, const DiffOperator& b) {
    return a.field_ == b.field_ && a.order_ == b.order_ && a.degree_ == b.degree_ && a.grid_ == b.grid_;
  }

 private:
  DiffOperator& accumulate(const DiffOperator& o, bool subtract) {
    if (!(field_ == o.field_)) throw FieldMismatch();
    const std::size_t r = std::max(order_, o.order_), d = std::max(degree_, o.degree_);
    std::vector<Element> grid(r * d, field_.zero());
    for (std::size_t i = 0; i < order_; ++i) {
      for (std::size_t j = 0; j < degree_; ++j) grid[i * d + j] = at(i, j);
    }
    for (std::size_t i = 0; i < o.order_; ++i) {
      for (std::size_t j = 0; j < o.degree_; ++j) {
        if (subtract) {
          grid[i * d + j] -= o.at(i, j);
        } else {
          grid[i * d + j] += o.at(i, j);
        }
      }
    }
    *this = DiffOperator(field_, r, d, std::move(grid));
    return *this;
  }

  void trim() {
    std::size_t r = 0, d = 0;
    for (std::size_t i = 0; i < order_; ++i) {
      for (std::size_t j = 0; j < degree_; ++j) {
        if (!grid_[i * degree_ + j].is_zero()) {
          r = std::max(r, i + 1);
          d = std::max(d, j + 1);
        }
      }
    }
    if (r == order_ && d == degree_) return;
    std::vector<Element> g;
    g.reserve(r * d);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < d; ++j) g.push_back(std::move(grid_[i * degree_ + j]));
    }
    grid_ = std::move(g);
    order_ = r;
    degree_ = d;
  }

  F field_;
  std::size_t order_ = 0;
  std::size_t degree_ = 0;
  std::vector<Element> grid_;
};

// sum_{i,j} L_{i,j} x^j P^{(i)}(x)
template <Field F>
Polynomial<F> apply(const DiffOperator<F>& l, const Polynomial<F>& p) {
  if (!(l.field() == p.field())) throw FieldMismatch();
  Polynomial<F> result(p.field());
  Polynomial<F> derivative = p;
  for (std::size_t i = 0; i < l.order_bound() && !derivative.is_zero(); ++i) {
    result += poly_mul(l.x_coefficient(i), derivative);
    derivative = derivative.derivative();
  }
  return result;
}

// Keeps the terms of D-order < n.
template <Field F>
DiffOperator<F> truncate_order(const DiffOperator<F>& l, std::size_t n) {
  if (n >= l.order_bound()) return l;
  const auto grid = l.grid();
  return DiffOperator<F>(l.field(), n, l.degree_bound(),
                         {grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(n * l.degree_bound())});
}

// sum (-1)^{i+j} L_{i,j} x^j D^i
template <Field F>
DiffOperator<F> psi(const DiffOperator<F>& l) {
  std::vector<ElementOf<F>> grid(l.grid().begin(), l.grid().end());
  const std::size_t d = l.degree_bound();
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (((k / d) + (k % d)) % 2 == 1) grid[k] = -grid[k];
  }
  return DiffOperator<F>(l.field(), l.order_bound(), d, std::move(grid));
}

// Product by rewriting with the commutation rule D x = x D + 1: the rows of
// D^i L are built by repeated left multiplication with D, then multiplied
// by K_i(x) with schoolbook convolution. No divisions.
template <Field F>
DiffOperator<F> naive_mul(const DiffOperator<F>& k, const DiffOperator<F>& l) {
  using E = ElementOf<F>;
  if (!(k.field() == l.field())) throw FieldMismatch();
  const F& field = k.field();
  if (k.is_zero() || l.is_zero()) return DiffOperator<F>(field);

  const std::size_t rk = k.order_bound(), dk = k.degree_bound();
  const std::size_t rl = l.order_bound(), dl = l.degree_bound();
  const std::size_t r = rk + rl - 1, d = dk + dl - 1;
  std::vector<E> out(r * d, field.zero());

  // rows[s] = coefficient of D^s in D^i L, each of length dl.
  std::vector<std::vector<E>> rows(rl);
  for (std::size_t s = 0; s < rl; ++s) rows[s].assign(l.grid().begin() + s * dl, l.grid().begin() + (s + 1) * dl);

  for (std::size_t i = 0; i < rk; ++i) {
    if (i > 0) {
      // D * (c(x) D^s) = c'(x) D^s + c(x) D^{s+1}
      std::vector<std::vector<E>> next(rows.size() + 1, std::vector<E>(dl, field.zero()));
      for (std::size_t s = 0; s < rows.size(); ++s) {
        for (std::size_t j = 1; j < dl; ++j) {
          next[s][j - 1] += rows[s][j] * field.from_integer(static_cast<std::int64_t>(j));
        }
        for (std::size_t j = 0; j < dl; ++j) next[s + 1][j] += rows[s][j];
      }
      rows = std::move(next);
    }
    const auto* ki = &k.grid()[i * dk];
    for (std::size_t s = 0; s < rows.size(); ++s) {
      E* dst = &out[s * d];
      const auto& row = rows[s];
      for (std::size_t a = 0; a < dk; ++a) {
        if (ki[a].is_zero()) continue;
        for (std::size_t b = 0; b < dl; ++b) dst[a + b] += ki[a] * row[b];
      }
    }
  }
  return DiffOperator<F>(field, r, d, std::move(out));
}

// Terms ordered by increasing D-power, then increasing x-power.
template <Field F>
std::string to_string(const DiffOperator<F>& l) {
  if (l.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < l.order_bound(); ++i) {
    for (std::size_t j = 0; j < l.degree_bound(); ++j) {
      const auto& c = l.at(i, j);
      if (c.is_zero()) continue;
      detail::append_term(out, l.field(), c, detail::monomial_text(j, i));
    }
  }
  return out;
}

template <Field F>
std::ostream& operator<<(std::ostream& os, const DiffOperator<F>& l) {
  return os << to_string(l);
}

// Terms `c`, `c*x^j`, `c*D^i`, `c*x^j*D^i`; repeated monomials are summed.
template <Field F>
DiffOperator<F> parse_operator(const F& field, std::string_view text) {
  const auto terms = detail::lex_terms(text, true);
  std::vector<std::tuple<std::size_t, std::size_t, ElementOf<F>>> triples;
  triples.reserve(terms.size());
  for (const auto& t : terms) triples.emplace_back(t.d_power, t.x_power, detail::term_coefficient(field, t));
  return DiffOperator<F>::from_terms(field, triples);
}

}  // namespace weyl
