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

// Dense univariate polynomials over an exact field.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "weyl/detail/modular_kernels.hpp"
#include "weyl/detail/rational_kernels.hpp"
#include "weyl/field.hpp"
#include "weyl/settings.hpp"

namespace weyl {

// Polynomial degree with -infinity for the zero polynomial.
class Degree {
 public:
  static constexpr Degree minus_infinity() noexcept { return Degree(); }
  constexpr explicit Degree(std::size_t value) noexcept : value_(value) {}

  constexpr bool is_finite() const noexcept { return value_.has_value(); }
  // Requires is_finite().
  constexpr std::size_t value() const { return *value_; }

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) noexcept {
    if (!a.is_finite() || !b.is_finite()) return a.is_finite() <=> b.is_finite();
    return *a.value_ <=> *b.value_;
  }
  friend constexpr Degree operator+(const Degree& a, const Degree& b) noexcept {
    if (!a.is_finite() || !b.is_finite()) return minus_infinity();
    return Degree(*a.value_ + *b.value_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Degree& d) {
    return d.is_finite() ? os << d.value() : os << "-inf";
  }

 private:
  constexpr Degree() noexcept = default;
  std::optional<std::size_t> value_;
};

template <Field F>
class Polynomial {
 public:
  using Element = ElementOf<F>;

  explicit Polynomial(F field) : field_(std::move(field)) {}
  Polynomial(F field, std::vector<Element> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial constant(const F& field, Element c) { return Polynomial(field, {std::move(c)}); }
  // x^n
  static Polynomial monomial(const F& field, std::size_t n) {
    std::vector<Element> c(n + 1, field.zero());
    c[n] = field.one();
    return Polynomial(field, std::move(c));
  }

  const F& field() const noexcept { return field_; }
  std::span<const Element> coeffs() const noexcept { return coeffs_; }
  std::vector<Element> release() && { return std::move(coeffs_); }

  // Number of stored coefficients; 0 for the zero polynomial.
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Degree degree() const noexcept {
    return coeffs_.empty() ? Degree::minus_infinity() : Degree(coeffs_.size() - 1);
  }
  Element coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }
  const Element& leading() const { return coeffs_.back(); }

  Element operator()(const Element& x) const {
    Element acc = field_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Element> d;
    if (coeffs_.size() > 1) {
      d.reserve(coeffs_.size() - 1);
      for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d.push_back(coeffs_[i] * field_.from_integer(static_cast<std::int64_t>(i)));
      }
    }
    return Polynomial(field_, std::move(d));
  }

  // Coefficients of index < n.
  Polynomial truncated(std::size_t n) const {
    return Polynomial(field_, {coeffs_.begin(), coeffs_.begin() + std::min(n, coeffs_.size())});
  }

  // Multiplication by x^n.
  Polynomial shifted(std::size_t n) const {
    if (is_zero()) return *this;
    std::vector<Element> c(n, field_.zero());
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(field_, std::move(c));
  }

  Polynomial& operator+=(const Polynomial& o) {
    check(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Element& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Element& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return poly_mul(a, b); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check(const Polynomial& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch();
  }
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  F field_;
  std::vector<Element> coeffs_;
};

namespace detail {

template <Field F>
std::vector<ElementOf<F>> convolve_schoolbook(const F& field, std::span<const ElementOf<F>> a,
                                              std::span<const ElementOf<F>> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<ElementOf<F>> out(a.size() + b.size() - 1, field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

template <Field F>
std::vector<ElementOf<F>> convolve_karatsuba(const F& field, std::span<const ElementOf<F>> a,
                                             std::span<const ElementOf<F>> b, std::size_t threshold) {
  using E = ElementOf<F>;
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t na = a.size(), nb = b.size();
  if (nb == 0) return {};
  if (nb < std::max<std::size_t>(threshold, 2)) return convolve_schoolbook(field, a, b);

  std::vector<E> out(na + nb - 1, field.zero());
  if (nb <= na / 2) {
    for (std::size_t off = 0; off < na; off += nb) {
      const auto prod = convolve_karatsuba(field, a.subspan(off, std::min(nb, na - off)), b, threshold);
      for (std::size_t k = 0; k < prod.size(); ++k) out[off + k] += prod[k];
    }
    return out;
  }
  const std::size_t m = na / 2;
  const auto a0 = a.first(m), a1 = a.subspan(m), b0 = b.first(m), b1 = b.subspan(m);
  std::vector<E> sa(a1.begin(), a1.end()), sb(b1.begin(), b1.end());
  sa.resize(std::max(a0.size(), a1.size()), field.zero());
  sb.resize(std::max(b0.size(), b1.size()), field.zero());
  for (std::size_t i = 0; i < a0.size(); ++i) sa[i] += a0[i];
  for (std::size_t i = 0; i < b0.size(); ++i) sb[i] += b0[i];

  const auto z0 = convolve_karatsuba(field, a0, b0, threshold);
  const auto z2 = convolve_karatsuba(field, a1, b1, threshold);
  auto z1 = convolve_karatsuba<F>(field, sa, sb, threshold);
  for (std::size_t k = 0; k < z0.size(); ++k) z1[k] -= z0[k];
  for (std::size_t k = 0; k < z2.size(); ++k) z1[k] -= z2[k];
  for (std::size_t k = 0; k < z0.size(); ++k) out[k] += z0[k];
  for (std::size_t k = 0; k < z1.size() && m + k < out.size(); ++k) out[m + k] += z1[k];
  for (std::size_t k = 0; k < z2.size(); ++k) out[2 * m + k] += z2[k];
  return out;
}

// Product of coefficient sequences with the kernel chosen by settings().
template <Field F>
std::vector<ElementOf<F>> convolve(const F& field, std::span<const ElementOf<F>> a,
                                   std::span<const ElementOf<F>> b) {
  if (a.empty() || b.empty()) return {};
  if constexpr (std::is_same_v<F, PrimeField>) {
    const std::uint64_t p = field.modulus();
    std::vector<std::uint64_t> ra(a.size()), rb(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].modulus() != p) throw FieldMismatch();
      ra[i] = a[i].value();
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i].modulus() != p) throw FieldMismatch();
      rb[i] = b[i].value();
    }
    const auto raw = mul_mod(ra, rb, p);
    std::vector<ModInt> out;
    out.reserve(raw.size());
    for (auto v : raw) out.emplace_back(v, p);
    return out;
  } else if constexpr (std::is_same_v<F, RationalField>) {
    const auto& s = settings();
    if (s.use_kronecker && std::min(a.size(), b.size()) >= s.kronecker_threshold) {
      return mul_rational_kronecker(a, b);
    }
    return convolve_karatsuba(field, a, b, s.karatsuba_threshold);
  } else {
    return convolve_karatsuba(field, a, b, settings().karatsuba_threshold);
  }
}

// First n coefficients of the power-series inverse of a; requires a[0] != 0.
template <Field F>
std::vector<ElementOf<F>> series_inverse(const F& field, std::span<const ElementOf<F>> a, std::size_t n) {
  using E = ElementOf<F>;
  if (a.empty() || a[0].is_zero()) throw DivisionByZero();
  std::vector<E> g{a[0].inv()};
  const E two = field.from_integer(2);
  std::size_t prec = 1;
  while (prec < n) {
    prec = std::min(2 * prec, n);
    // g <- g (2 - a g) mod x^prec
    const auto a_low = a.first(std::min(prec, a.size()));
    auto ag = convolve<F>(field, a_low, g);
    ag.resize(prec, field.zero());
    for (auto& c : ag) c = -c;
    ag[0] += two;
    auto next = convolve<F>(field, g, ag);
    next.resize(prec, field.zero());
    g = std::move(next);
  }
  g.resize(n, field.zero());
  return g;
}

}  // namespace detail

template <Field F>
Polynomial<F> poly_mul(const Polynomial<F>& p, const Polynomial<F>& q) {
  if (!(p.field() == q.field())) throw FieldMismatch();
  return Polynomial<F>(p.field(), detail::convolve(p.field(), p.coeffs(), q.coeffs()));
}

// Reciprocal of the reversed divisor, precomputed for repeated reductions.
template <Field F>
struct DivisorInverse {
  std::vector<ElementOf<F>> rev_inverse;  // 1/rev(Q) mod x^precision
  std::size_t precision() const noexcept { return rev_inverse.size(); }
};

template <Field F>
DivisorInverse<F> divisor_inverse(const Polynomial<F>& q, std::size_t precision) {
  if (q.is_zero()) throw DivisionByZero();
  std::vector<ElementOf<F>> rev(q.coeffs().rbegin(), q.coeffs().rend());
  return {detail::series_inverse<F>(q.field(), rev, precision)};
}

namespace detail {

template <Field F>
std::pair<Polynomial<F>, Polynomial<F>> divrem_schoolbook(const Polynomial<F>& p, const Polynomial<F>& q) {
  using E = ElementOf<F>;
  const F& field = p.field();
  std::vector<E> rem(p.coeffs().begin(), p.coeffs().end());
  const std::size_t nq = q.size();
  const std::size_t nquot = p.size() - nq + 1;
  std::vector<E> quot(nquot, field.zero());
  const E lead_inv = q.leading().inv();
  const auto qc = q.coeffs();
  for (std::size_t k = nquot; k-- > 0;) {
    const E c = rem[k + nq - 1] * lead_inv;
    quot[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < nq; ++j) rem[k + j] -= c * qc[j];
  }
  rem.resize(nq - 1, field.zero());
  return {Polynomial<F>(field, std::move(quot)), Polynomial<F>(field, std::move(rem))};
}

}  // namespace detail

// Division with remainder using a precomputed reversed inverse, which must
// have precision >= deg P - deg Q + 1.
template <Field F>
std::pair<Polynomial<F>, Polynomial<F>> poly_divrem(const Polynomial<F>& p, const Polynomial<F>& q,
                                                    const DivisorInverse<F>& inverse) {
  using E = ElementOf<F>;
  if (!(p.field() == q.field())) throw FieldMismatch();
  if (q.is_zero()) throw DivisionByZero();
  const F& field = p.field();
  if (p.size() < q.size()) return {Polynomial<F>(field), p};
  const std::size_t nquot = p.size() - q.size() + 1;
  if (inverse.precision() < nquot) throw PreconditionViolated("divisor inverse precision too small");

  std::vector<E> rev_p(p.coeffs().rbegin(), p.coeffs().rbegin() + static_cast<std::ptrdiff_t>(nquot));
  const std::span<const E> inv_low = std::span<const E>(inverse.rev_inverse).first(nquot);
  auto rev_quot = detail::convolve<F>(field, rev_p, inv_low);
  rev_quot.resize(nquot, field.zero());
  std::vector<E> quot(rev_quot.rbegin(), rev_quot.rend());
  Polynomial<F> quotient(field, std::move(quot));

  // Only the low deg Q coefficients of Q * quot are needed.
  const std::size_t nrem = q.size() - 1;
  const auto qc = q.coeffs().first(std::min(nrem, q.size()));
  const auto qq = quotient.coeffs().first(std::min(nrem, quotient.size()));
  auto low = detail::convolve<F>(field, qc, qq);
  std::vector<E> rem(p.coeffs().begin(), p.coeffs().begin() + static_cast<std::ptrdiff_t>(nrem));
  for (std::size_t k = 0; k < nrem && k < low.size(); ++k) rem[k] -= low[k];
  return {std::move(quotient), Polynomial<F>(field, std::move(rem))};
}

// P = Q * quot + rem with deg rem < deg Q.
template <Field F>
std::pair<Polynomial<F>, Polynomial<F>> poly_divrem(const Polynomial<F>& p, const Polynomial<F>& q) {
  if (!(p.field() == q.field())) throw FieldMismatch();
  if (q.is_zero()) throw DivisionByZero();
  if (p.size() < q.size()) return {Polynomial<F>(p.field()), p};
  const std::size_t nquot = p.size() - q.size() + 1;
  const std::size_t cutoff = std::max<std::size_t>(settings().karatsuba_threshold, 2);
  if (nquot < cutoff || q.size() < cutoff) return detail::divrem_schoolbook(p, q);
  return poly_divrem(p, q, divisor_inverse(q, nquot));
}

// P(x + a) by a single convolution of (i! p_i) against (a^s / s!).
template <Field F>
Polynomial<F> taylor_shift(const Polynomial<F>& p, const ElementOf<F>& a) {
  using E = ElementOf<F>;
  if (p.is_zero() || a.is_zero()) return p;
  const F& field = p.field();
  const std::size_t n = p.size();
  const auto table = factorial_table(field, n - 1);
  std::vector<E> u(n, field.zero()), v(n, field.zero());
  for (std::size_t i = 0; i < n; ++i) u[n - 1 - i] = p.coeffs()[i] * table.fact[i];
  E power = field.one();
  for (std::size_t s = 0; s < n; ++s) {
    v[s] = power * table.inv_fact[s];
    power *= a;
  }
  auto w = detail::convolve<F>(field, u, v);
  std::vector<E> out(n, field.zero());
  for (std::size_t k = 0; k < n; ++k) out[k] = w[n - 1 - k] * table.inv_fact[k];
  return Polynomial<F>(field, std::move(out));
}

// f(0), ..., f(N-1) for f(m) = sum_i a_i m (m-1) ... (m-i+1).
template <Field F>
std::vector<ElementOf<F>> falling_to_values(const F& field, std::span<const ElementOf<F>> a, std::size_t n) {
  using E = ElementOf<F>;
  if (n == 0) return {};
  characteristic_guard(field.descriptor(), n);
  const auto table = factorial_table(field, n - 1);
  const auto head = a.first(std::min(a.size(), n));
  auto conv = detail::convolve<F>(field, head, std::span<const E>(table.inv_fact));
  std::vector<E> values(n, field.zero());
  for (std::size_t m = 0; m < n && m < conv.size(); ++m) values[m] = conv[m] * table.fact[m];
  return values;
}

// Inverse of falling_to_values at N = values.size().
template <Field F>
std::vector<ElementOf<F>> values_to_falling(const F& field, std::span<const ElementOf<F>> values) {
  using E = ElementOf<F>;
  const std::size_t n = values.size();
  if (n == 0) return {};
  characteristic_guard(field.descriptor(), n);
  const auto table = factorial_table(field, n - 1);
  std::vector<E> scaled(n, field.zero()), alt(n, field.zero());
  for (std::size_t m = 0; m < n; ++m) {
    scaled[m] = values[m] * table.inv_fact[m];
    alt[m] = (m % 2 == 0) ? table.inv_fact[m] : -table.inv_fact[m];
  }
  auto conv = detail::convolve<F>(field, scaled, alt);
  conv.resize(n, field.zero());
  return conv;
}

// `c_k*x^k + ... + c_0`, highest degree first.
template <Field F>
std::string to_string(const Polynomial<F>& p);

template <Field F>
Polynomial<F> parse_polynomial(const F& field, std::string_view text);

}  // namespace weyl

#include "weyl/detail/polynomial_text.hpp"
