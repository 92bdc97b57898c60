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

// Term-level lexer and printer shared by the polynomial and operator text
// forms. Included from polynomial.hpp.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace weyl::detail {

struct TermText {
  bool negative = false;
  std::string scalar;  // empty means 1
  std::size_t x_power = 0;
  std::size_t d_power = 0;
};

// Parses `t1 +/- t2 +/- ...` where each term is `[c][*x[^j]][*D[^i]]`
// (the `*` after a missing scalar is omitted). `allow_d` rejects D when false.
inline std::vector<TermText> lex_terms(std::string_view input, bool allow_d) {
  std::string text;
  text.reserve(input.size());
  for (char c : input) {
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  if (text.empty()) throw ParseError("empty expression");

  std::vector<TermText> terms;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError(what + " at offset " + std::to_string(pos) + " in '" + text + "'");
  };
  auto read_digits = [&]() {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected digits");
    return std::string_view(text).substr(start, pos - start);
  };
  auto read_exponent = [&]() -> std::size_t {
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const auto digits = read_digits();
      if (digits.size() > 9) fail("exponent too large");
      return static_cast<std::size_t>(std::stoul(std::string(digits)));
    }
    return 1;
  };

  bool first = true;
  while (pos < text.size()) {
    TermText term;
    if (text[pos] == '+' || text[pos] == '-') {
      term.negative = text[pos] == '-';
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;

    bool any = false, seen_x = false, seen_d = false;
    while (true) {
      if (pos >= text.size()) break;
      const char c = text[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        if (any) fail("scalar must lead the term");
        std::string scalar(read_digits());
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          scalar += '/';
          scalar += read_digits();
        }
        term.scalar = std::move(scalar);
      } else if (c == 'x') {
        if (seen_x || seen_d) fail("x must appear once, before D");
        ++pos;
        term.x_power = read_exponent();
        seen_x = true;
      } else if (c == 'D') {
        if (!allow_d) fail("unexpected D in polynomial");
        if (seen_d) fail("D must appear once");
        ++pos;
        term.d_power = read_exponent();
        seen_d = true;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      any = true;
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        if (pos >= text.size()) fail("dangling '*'");
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    terms.push_back(std::move(term));
  }
  return terms;
}

inline std::string monomial_text(std::size_t x_power, std::size_t d_power) {
  std::string out;
  auto append = [&](char var, std::size_t e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (e > 1) out += '^' + std::to_string(e);
  };
  append('x', x_power);
  append('D', d_power);
  return out;
}

// Appends one nonzero term to `out` using ` + ` / ` - ` separators.
template <Field F>
void append_term(std::string& out, const F& field, const ElementOf<F>& c, const std::string& monomial) {
  std::string coeff = field.format(c);
  std::string body;
  if (monomial.empty()) {
    body = coeff;
  } else if (c == field.one()) {
    body = monomial;
  } else if (coeff == "-1") {
    body = "-" + monomial;
  } else {
    body = coeff + "*" + monomial;
  }
  if (out.empty()) {
    out = std::move(body);
  } else if (body.front() == '-') {
    out += " - ";
    out.append(body, 1);
  } else {
    out += " + ";
    out += body;
  }
}

template <Field F>
ElementOf<F> term_coefficient(const F& field, const TermText& term) {
  ElementOf<F> c = term.scalar.empty() ? field.one() : field.parse_scalar(term.scalar);
  return term.negative ? -c : c;
}

}  // namespace weyl::detail

namespace weyl {

template <Field F>
std::string to_string(const Polynomial<F>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const auto& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    detail::append_term(out, p.field(), c, detail::monomial_text(k, 0));
  }
  return out;
}

template <Field F>
Polynomial<F> parse_polynomial(const F& field, std::string_view text) {
  const auto terms = detail::lex_terms(text, false);
  std::vector<ElementOf<F>> coeffs;
  for (const auto& t : terms) {
    if (t.x_power >= coeffs.size()) coeffs.resize(t.x_power + 1, field.zero());
    coeffs[t.x_power] += detail::term_coefficient(field, t);
  }
  return Polynomial<F>(field, std::move(coeffs));
}

template <Field F>
std::ostream& operator<<(std::ostream& os, const Polynomial<F>& p) {
  return os << to_string(p);
}

}  // namespace weyl
