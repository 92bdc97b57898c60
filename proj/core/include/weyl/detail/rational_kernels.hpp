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

// Rational convolution by clearing denominators: the integer numerators are
// packed into one big integer each (Kronecker substitution), multiplied
// once, and unpacked. Each output coefficient is reduced to lowest terms
// exactly once.

#include <span>
#include <vector>

#include "weyl/field.hpp"

namespace weyl::detail {

std::vector<Rational> mul_rational_kronecker(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace weyl::detail
