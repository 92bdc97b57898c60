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

#include "weyl/field.hpp"

#include <array>
#include <cctype>
#include <charconv>

namespace weyl {
namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1) result = static_cast<std::uint64_t>(static_cast<unsigned __int128>(result) * base % m);
    base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % m);
    e >>= 1;
  }
  return result;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

struct ScalarParts {
  bool negative = false;
  std::string_view numerator;
  std::string_view denominator;  // empty when absent
};

ScalarParts split_scalar(std::string_view text) {
  ScalarParts parts;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    parts.negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  parts.numerator = text.substr(0, slash);
  if (slash != std::string_view::npos) {
    parts.denominator = text.substr(slash + 1);
    if (!all_digits(parts.denominator)) throw ParseError("malformed denominator in scalar");
  }
  if (!all_digits(parts.numerator)) throw ParseError("malformed scalar '" + std::string(text) + "'");
  return parts;
}

std::uint64_t reduce_decimal(std::string_view digits, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (char c : digits) {
    acc = static_cast<std::uint64_t>((static_cast<unsigned __int128>(acc) * 10 + (c - '0')) % p);
  }
  return acc;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldDescriptor FieldDescriptor::prime(std::uint64_t p) {
  if (p >= kMaxModulus) throw std::invalid_argument("modulus must be below 2^62");
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  return {FieldKind::Prime, p};
}

FieldDescriptor FieldDescriptor::parse(std::string_view text) {
  if (text == "rational" || text == "Q") return rational();
  if (text.starts_with("fp:")) {
    const auto digits = text.substr(3);
    std::uint64_t p = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw ParseError("malformed field modulus '" + std::string(digits) + "'");
    }
    try {
      return prime(p);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown field '" + std::string(text) + "' (expected rational or fp:<p>)");
}

std::string FieldDescriptor::to_string() const {
  return is_rational() ? std::string("rational") : "fp:" + std::to_string(modulus);
}

void characteristic_guard(const FieldDescriptor& field, std::uint64_t bound) {
  if (field.is_rational() || field.modulus > bound) return;
  throw CharacteristicTooSmall("characteristic " + std::to_string(field.modulus) +
                               " does not exceed required bound " + std::to_string(bound));
}

Rational Rational::inv() const {
  if (is_zero()) throw DivisionByZero();
  Rational r;
  r.value_ = 1 / value_;
  return r;
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

ModInt ModInt::pow(std::uint64_t e) const noexcept { return {pow_mod(value_, e, modulus_), modulus_}; }

ModInt ModInt::inv() const {
  if (value_ == 0) throw DivisionByZero();
  return pow(modulus_ - 2);
}

Rational RationalField::parse_scalar(std::string_view text) const {
  const auto parts = split_scalar(text);
  mpz_class num(std::string(parts.numerator), 10);
  mpz_class den(1);
  if (!parts.denominator.empty()) {
    den = mpz_class(std::string(parts.denominator), 10);
    if (den == 0) throw DivisionByZero();
  }
  if (parts.negative) num = -num;
  return Rational(mpq_class(num, den));
}

PrimeField::PrimeField(std::uint64_t modulus) : modulus_(FieldDescriptor::prime(modulus).modulus) {}

PrimeField::PrimeField(const FieldDescriptor& descriptor) : PrimeField(descriptor.modulus) {
  if (descriptor.kind != FieldKind::Prime) throw std::invalid_argument("descriptor is not a prime field");
}

ModInt PrimeField::from_integer(std::int64_t n) const noexcept {
  const auto p = static_cast<std::int64_t>(modulus_);
  std::int64_t r = n % p;
  if (r < 0) r += p;
  return {static_cast<std::uint64_t>(r), modulus_};
}

ModInt PrimeField::parse_scalar(std::string_view text) const {
  const auto parts = split_scalar(text);
  ModInt value{reduce_decimal(parts.numerator, modulus_), modulus_};
  if (!parts.denominator.empty()) {
    value /= ModInt{reduce_decimal(parts.denominator, modulus_), modulus_};
  }
  return parts.negative ? -value : value;
}

AnyField make_field(const FieldDescriptor& descriptor) {
  if (descriptor.is_rational()) return RationalField{};
  return PrimeField(descriptor);
}

}  // namespace weyl
