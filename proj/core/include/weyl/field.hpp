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

// Exact coefficient fields: arbitrary-precision rationals and prime fields
// Z/pZ with 2 <= p < 2^62.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "weyl/errors.hpp"

namespace weyl {

enum class FieldKind { Rational, Prime };

inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

// Runtime description of a coefficient field. Textual form is `rational` or
// `fp:<p>`.
struct FieldDescriptor {
  FieldKind kind = FieldKind::Rational;
  std::uint64_t modulus = 0;

  static FieldDescriptor rational() noexcept { return {}; }
  // Throws std::invalid_argument unless p is a prime below kMaxModulus.
  static FieldDescriptor prime(std::uint64_t p);
  static FieldDescriptor parse(std::string_view text);

  bool is_rational() const noexcept { return kind == FieldKind::Rational; }
  std::string to_string() const;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

// Succeeds iff the field is the rationals or its modulus exceeds `bound`, so
// that every integer in [1, bound] is invertible.
void characteristic_guard(const FieldDescriptor& field, std::uint64_t bound);

class Rational {
 public:
  Rational() = default;
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }
  explicit Rational(std::int64_t n) : value_(static_cast<long>(n)) {}

  const mpq_class& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return sgn(value_) == 0; }
  Rational inv() const;

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

  // `a/b` in lowest terms, `/b` omitted when b = 1.
  std::string to_string() const;

 private:
  mpq_class value_;
};

// Residue modulo a prime. The modulus travels with the value so that mixing
// elements of different fields is detected.
class ModInt {
 public:
  ModInt() = default;
  // Requires value < modulus.
  constexpr ModInt(std::uint64_t value, std::uint64_t modulus) noexcept
      : value_(value), modulus_(modulus) {}

  constexpr std::uint64_t value() const noexcept { return value_; }
  constexpr std::uint64_t modulus() const noexcept { return modulus_; }
  constexpr bool is_zero() const noexcept { return value_ == 0; }
  ModInt inv() const;
  ModInt pow(std::uint64_t e) const noexcept;

  ModInt& operator+=(const ModInt& o) {
    check(o);
    value_ += o.value_;
    if (value_ >= modulus_) value_ -= modulus_;
    return *this;
  }
  ModInt& operator-=(const ModInt& o) {
    check(o);
    value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + modulus_ - o.value_;
    return *this;
  }
  ModInt& operator*=(const ModInt& o) {
    check(o);
    value_ = mul_mod(value_, o.value_, modulus_);
    return *this;
  }
  ModInt& operator/=(const ModInt& o) { return *this *= o.inv(); }

  friend ModInt operator+(ModInt a, const ModInt& b) { return a += b; }
  friend ModInt operator-(ModInt a, const ModInt& b) { return a -= b; }
  friend ModInt operator*(ModInt a, const ModInt& b) { return a *= b; }
  friend ModInt operator/(ModInt a, const ModInt& b) { return a /= b; }
  friend ModInt operator-(const ModInt& a) noexcept {
    return {a.value_ == 0 ? 0 : a.modulus_ - a.value_, a.modulus_};
  }
  friend bool operator==(const ModInt& a, const ModInt& b) {
    if (a.modulus_ != b.modulus_) throw FieldMismatch();
    return a.value_ == b.value_;
  }
  friend bool operator<(const ModInt& a, const ModInt& b) noexcept {
    return a.modulus_ != b.modulus_ ? a.modulus_ < b.modulus_ : a.value_ < b.value_;
  }

  std::string to_string() const { return std::to_string(value_); }

  static std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    if (m <= 0xffffffffULL) return a * b % m;
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
  }

 private:
  void check(const ModInt& o) const {
    if (modulus_ != o.modulus_) [[unlikely]]
      throw FieldMismatch();
  }

  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 0;
};

class RationalField {
 public:
  using Element = Rational;

  Element zero() const { return Rational(); }
  Element one() const { return Rational(std::int64_t{1}); }
  Element from_integer(std::int64_t n) const { return Rational(n); }
  FieldDescriptor descriptor() const noexcept { return FieldDescriptor::rational(); }

  std::string format(const Element& a) const { return a.to_string(); }
  // Accepts `[-]digits[/digits]`.
  Element parse_scalar(std::string_view text) const;

  friend bool operator==(const RationalField&, const RationalField&) noexcept { return true; }
};

class PrimeField {
 public:
  using Element = ModInt;

  explicit PrimeField(std::uint64_t modulus);
  explicit PrimeField(const FieldDescriptor& descriptor);

  std::uint64_t modulus() const noexcept { return modulus_; }
  Element zero() const noexcept { return {0, modulus_}; }
  Element one() const noexcept { return {1, modulus_}; }
  Element from_integer(std::int64_t n) const noexcept;
  Element from_residue(std::uint64_t n) const noexcept { return {n % modulus_, modulus_}; }
  FieldDescriptor descriptor() const noexcept { return {FieldKind::Prime, modulus_}; }

  std::string format(const Element& a) const { return a.to_string(); }
  // Accepts `[-]digits[/digits]` of any length, reduced modulo p.
  Element parse_scalar(std::string_view text) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept {
    return a.modulus_ == b.modulus_;
  }

 private:
  std::uint64_t modulus_;
};

template <class F>
concept Field = std::equality_comparable<F> && requires(const F& f, const typename F::Element& a,
                                                        std::int64_t n, std::string_view s) {
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.from_integer(n) } -> std::same_as<typename F::Element>;
  { f.descriptor() } -> std::same_as<FieldDescriptor>;
  { f.format(a) } -> std::same_as<std::string>;
  { f.parse_scalar(s) } -> std::same_as<typename F::Element>;
  { a + a } -> std::same_as<typename F::Element>;
  { a - a } -> std::same_as<typename F::Element>;
  { a * a } -> std::same_as<typename F::Element>;
  { a / a } -> std::same_as<typename F::Element>;
  { -a } -> std::same_as<typename F::Element>;
  { a.inv() } -> std::same_as<typename F::Element>;
  { a.is_zero() } -> std::same_as<bool>;
  { a == a } -> std::same_as<bool>;
  { a < a } -> std::same_as<bool>;
};

template <Field F>
using ElementOf = typename F::Element;

using AnyField = std::variant<RationalField, PrimeField>;

AnyField make_field(const FieldDescriptor& descriptor);

// k! and 1/k! for 0 <= k <= n.
template <Field F>
struct FactorialTable {
  std::vector<ElementOf<F>> fact;
  std::vector<ElementOf<F>> inv_fact;
};

template <Field F>
FactorialTable<F> factorial_table(const F& field, std::size_t n) {
  characteristic_guard(field.descriptor(), n);
  FactorialTable<F> table;
  table.fact.reserve(n + 1);
  table.fact.push_back(field.one());
  for (std::size_t k = 1; k <= n; ++k) {
    table.fact.push_back(table.fact.back() * field.from_integer(static_cast<std::int64_t>(k)));
  }
  table.inv_fact.assign(n + 1, field.zero());
  table.inv_fact[n] = table.fact[n].inv();
  for (std::size_t k = n; k > 0; --k) {
    table.inv_fact[k - 1] = table.inv_fact[k] * field.from_integer(static_cast<std::int64_t>(k));
  }
  return table;
}

}  // namespace weyl
