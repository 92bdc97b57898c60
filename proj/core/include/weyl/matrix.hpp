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

// Dense and block-diagonal exact matrices.

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "weyl/detail/parallel.hpp"
#include "weyl/field.hpp"
#include "weyl/settings.hpp"

namespace weyl {

template <Field F>
class Matrix {
 public:
  using Element = ElementOf<F>;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, field_.zero()) {}
  Matrix(F field, std::size_t rows, std::size_t cols, std::vector<Element> entries)
      : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw ShapeMismatch("matrix entry count differs from rows * cols");
  }

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  const F& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Element& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<Element>& entries() const noexcept { return entries_; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Element& e) { return e.is_zero(); });
  }

  // Rows [r0, r0 + nr) x cols [c0, c0 + nc), zero-padded past the edge.
  Matrix sub(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix out(field_, nr, nc);
    for (std::size_t i = 0; i < nr && r0 + i < rows_; ++i) {
      for (std::size_t j = 0; j < nc && c0 + j < cols_; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    }
    return out;
  }

  // Adds `block` at (r0, c0), dropping entries past the edge.
  void add_block(std::size_t r0, std::size_t c0, const Matrix& block) {
    for (std::size_t i = 0; i < block.rows() && r0 + i < rows_; ++i) {
      for (std::size_t j = 0; j < block.cols() && c0 + j < cols_; ++j) (*this)(r0 + i, c0 + j) += block(i, j);
    }
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  // Debug dump: one line per row, entries separated by spaces.
  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      for (std::size_t j = 0; j < m.cols_; ++j) {
        if (j != 0) os << ' ';
        os << m.field_.format(m(i, j));
      }
      os << '\n';
    }
    return os;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch();
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix shapes differ");
  }

  F field_;
  std::size_t rows_, cols_;
  std::vector<Element> entries_;
};

template <Field F>
Matrix<F> mat_mul_schoolbook(const Matrix<F>& a, const Matrix<F>& b) {
  if (!(a.field() == b.field())) throw FieldMismatch();
  if (a.cols() != b.rows()) throw ShapeMismatch("inner dimensions differ");
  Matrix<F> c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

// Strassen recursion down to `threshold`. Odd dimensions are zero-padded;
// shapes more than 2:1 out of balance are split into squarish tiles first.
template <Field F>
Matrix<F> mat_mul_strassen(const Matrix<F>& a, const Matrix<F>& b, std::size_t threshold) {
  if (!(a.field() == b.field())) throw FieldMismatch();
  if (a.cols() != b.rows()) throw ShapeMismatch("inner dimensions differ");
  const std::size_t n = a.rows(), m = a.cols(), q = b.cols();
  const std::size_t lo = std::min({n, m, q});
  const std::size_t hi = std::max({n, m, q});
  if (lo <= std::max<std::size_t>(threshold, 1)) return mat_mul_schoolbook(a, b);
  const F& field = a.field();

  if (hi > 2 * lo) {
    Matrix<F> c(field, n, q);
    if (hi == n) {
      const std::size_t h = n / 2;
      c.add_block(0, 0, mat_mul_strassen(a.sub(0, 0, h, m), b, threshold));
      c.add_block(h, 0, mat_mul_strassen(a.sub(h, 0, n - h, m), b, threshold));
    } else if (hi == q) {
      const std::size_t h = q / 2;
      c.add_block(0, 0, mat_mul_strassen(a, b.sub(0, 0, m, h), threshold));
      c.add_block(0, h, mat_mul_strassen(a, b.sub(0, h, m, q - h), threshold));
    } else {
      const std::size_t h = m / 2;
      c.add_block(0, 0, mat_mul_strassen(a.sub(0, 0, n, h), b.sub(0, 0, h, q), threshold));
      c.add_block(0, 0, mat_mul_strassen(a.sub(0, h, n, m - h), b.sub(h, 0, m - h, q), threshold));
    }
    return c;
  }

  const std::size_t hn = (n + 1) / 2, hm = (m + 1) / 2, hq = (q + 1) / 2;
  const auto a11 = a.sub(0, 0, hn, hm), a12 = a.sub(0, hm, hn, hm);
  const auto a21 = a.sub(hn, 0, hn, hm), a22 = a.sub(hn, hm, hn, hm);
  const auto b11 = b.sub(0, 0, hm, hq), b12 = b.sub(0, hq, hm, hq);
  const auto b21 = b.sub(hm, 0, hm, hq), b22 = b.sub(hm, hq, hm, hq);

  const auto m1 = mat_mul_strassen(a11 + a22, b11 + b22, threshold);
  const auto m2 = mat_mul_strassen(a21 + a22, b11, threshold);
  const auto m3 = mat_mul_strassen(a11, b12 - b22, threshold);
  const auto m4 = mat_mul_strassen(a22, b21 - b11, threshold);
  const auto m5 = mat_mul_strassen(a11 + a12, b22, threshold);
  const auto m6 = mat_mul_strassen(a21 - a11, b11 + b12, threshold);
  const auto m7 = mat_mul_strassen(a12 - a22, b21 + b22, threshold);

  Matrix<F> c(field, n, q);
  c.add_block(0, 0, m1 + m4 - m5 + m7);
  c.add_block(0, hq, m3 + m5);
  c.add_block(hn, 0, m2 + m4);
  c.add_block(hn, hq, m1 - m2 + m3 + m6);
  return c;
}

template <Field F>
Matrix<F> mat_mul(const Matrix<F>& a, const Matrix<F>& b) {
  return mat_mul_strassen(a, b, settings().strassen_threshold);
}

template <Field F>
struct BlockDiagonalMatrix {
  std::vector<Matrix<F>> blocks;

  std::size_t block_count() const noexcept { return blocks.size(); }
  friend bool operator==(const BlockDiagonalMatrix&, const BlockDiagonalMatrix&) = default;
};

template <Field F>
BlockDiagonalMatrix<F> block_mul(const BlockDiagonalMatrix<F>& a, const BlockDiagonalMatrix<F>& b) {
  if (a.block_count() != b.block_count()) throw BlockCountMismatch("block counts differ");
  for (std::size_t j = 0; j < a.block_count(); ++j) {
    if (a.blocks[j].cols() != b.blocks[j].rows()) {
      throw ShapeMismatch("block " + std::to_string(j) + " has incompatible inner dimensions");
    }
  }
  std::vector<Matrix<F>> out(a.blocks.begin(), a.blocks.end());
  detail::parallel_for(a.block_count(), [&](std::size_t j) { out[j] = mat_mul(a.blocks[j], b.blocks[j]); });
  return {std::move(out)};
}

}  // namespace weyl
