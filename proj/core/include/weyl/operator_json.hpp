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

// JSON form of an operator:
//   {"field": "fp:101", "terms": [[i, j, "c"], ...]}
// with i the D-power, j the x-power and c a scalar string. Terms are written
// in canonical order and omit zero coefficients.

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "weyl/diff_operator.hpp"
#include "weyl/errors.hpp"
#include "weyl/field.hpp"

namespace weyl {

template <Field F>
nlohmann::json to_json(const DiffOperator<F>& l) {
  nlohmann::json terms = nlohmann::json::array();
  for (std::size_t i = 0; i < l.order_bound(); ++i) {
    for (std::size_t j = 0; j < l.degree_bound(); ++j) {
      const auto& c = l.at(i, j);
      if (!c.is_zero()) terms.push_back({i, j, l.field().format(c)});
    }
  }
  return {{"field", l.field().descriptor().to_string()}, {"terms", std::move(terms)}};
}

// The "field" member must name `field`; mismatches raise FieldMismatch.
template <Field F>
DiffOperator<F> operator_from_json(const F& field, const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("terms") || !doc.at("terms").is_array()) {
    throw ParseError("operator JSON needs an object with a \"terms\" array");
  }
  if (doc.contains("field")) {
    if (!doc.at("field").is_string()) throw ParseError("operator JSON \"field\" must be a string");
    if (!(FieldDescriptor::parse(doc.at("field").get<std::string>()) == field.descriptor())) throw FieldMismatch();
  }
  std::vector<std::tuple<std::size_t, std::size_t, ElementOf<F>>> triples;
  for (const auto& term : doc.at("terms")) {
    if (!term.is_array() || term.size() != 3 || !term[0].is_number_unsigned() || !term[1].is_number_unsigned() ||
        !term[2].is_string()) {
      throw ParseError("operator JSON terms are [i, j, \"c\"] with nonnegative integers i, j");
    }
    triples.emplace_back(term[0].get<std::size_t>(), term[1].get<std::size_t>(),
                         field.parse_scalar(term[2].get<std::string>()));
  }
  return DiffOperator<F>::from_terms(field, triples);
}

template <Field F>
DiffOperator<F> parse_operator_json(const F& field, const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return operator_from_json(field, doc);
}

}  // namespace weyl
