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

#include <gtest/gtest.h>

#include "weyl_test_support.hpp"

namespace weyltest {
namespace {

using weyl::HermiteSpec;
using weyl::HermiteTree;
using weyl::HermiteValues;

template <Field F>
HermiteSpec<F> spec_of(const F& f, std::initializer_list<std::pair<std::int64_t, std::size_t>> items) {
  HermiteSpec<F> s;
  for (const auto& [pt, c] : items) {
    s.points.push_back(f.from_integer(pt));
    s.multiplicities.push_back(c);
  }
  return s;
}

template <Field F>
std::vector<ElementOf<F>> flatten(const HermiteValues<F>& v) {
  std::vector<ElementOf<F>> out;
  for (const auto& b : v.blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Derivatives P^{(s)}(a_j), s < c_j, by repeated symbolic differentiation.
template <Field F>
HermiteValues<F> evaluate_reference(const Polynomial<F>& p, const HermiteSpec<F>& spec) {
  HermiteValues<F> out;
  for (std::size_t j = 0; j < spec.points.size(); ++j) {
    std::vector<ElementOf<F>> block;
    for (std::size_t s = 0; s < spec.multiplicities[j]; ++s) block.push_back(eval(derive(p, s), spec.points[j]));
    out.blocks.push_back(std::move(block));
  }
  return out;
}

template <Field F>
HermiteSpec<F> random_spec(const F& f, std::size_t max_points, std::size_t max_mult, Rng& rng) {
  const std::size_t k = 1 + rng.below(max_points);
  HermiteSpec<F> s{random_points(f, k, rng), {}};
  for (std::size_t j = 0; j < k; ++j) s.multiplicities.push_back(1 + rng.below(max_mult));
  return s;
}

template <class F>
class HermiteTest : public ::testing::Test {
 protected:
  F f = test_field<F>();
};
TYPED_TEST_SUITE(HermiteTest, FieldTypes, FieldNames);

TYPED_TEST(HermiteTest, CubeWithDoublePoints) {
  const auto& f = this->f;
  const auto spec = spec_of(f, {{0, 2}, {1, 2}});
  const auto x3 = Polynomial<TypeParam>::monomial(f, 3);
  const auto values = weyl::hermite_evaluate(x3, spec);
  EXPECT_EQ(flatten(values), (std::vector{f.zero(), f.zero(), f.one(), f.from_integer(3)}));
  EXPECT_EQ(weyl::hermite_interpolate(f, values, spec), x3);
}

TYPED_TEST(HermiteTest, PlainMultipointEvaluation) {
  const auto& f = this->f;
  const auto p = weyl::parse_polynomial(f, "x^2 + 1");
  const auto values = weyl::hermite_evaluate(p, spec_of(f, {{0, 1}, {1, 1}, {2, 1}}));
  EXPECT_EQ(flatten(values), (std::vector{f.one(), f.from_integer(2), f.from_integer(5)}));
}

TYPED_TEST(HermiteTest, ZeroPolynomialAndZeroValues) {
  const auto& f = this->f;
  const auto spec = spec_of(f, {{-3, 4}, {5, 1}, {7, 2}});
  const auto values = weyl::hermite_evaluate(Polynomial<TypeParam>(f), spec);
  for (const auto& v : flatten(values)) EXPECT_TRUE(v.is_zero());
  EXPECT_TRUE(weyl::hermite_interpolate(f, values, spec).is_zero());
}

TYPED_TEST(HermiteTest, RejectsDuplicateOrEmptySpecs) {
  const auto& f = this->f;
  const auto p = weyl::parse_polynomial(f, "x + 1");
  EXPECT_THROW(weyl::hermite_evaluate(p, spec_of(f, {{1, 2}, {1, 1}})), weyl::DuplicatePoints);
  EXPECT_THROW(weyl::hermite_evaluate(p, spec_of(f, {{1, 0}})), weyl::PreconditionViolated);
  EXPECT_THROW(weyl::hermite_evaluate(p, HermiteSpec<TypeParam>{}), weyl::PreconditionViolated);
}

TYPED_TEST(HermiteTest, EvaluationMatchesSymbolicDifferentiation) {
  const auto& f = this->f;
  Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    const auto spec = random_spec(f, 8, 8, rng);
    const auto p = weyl::random_polynomial(f, 1 + rng.below(25), rng);
    ASSERT_EQ(weyl::hermite_evaluate(p, spec), evaluate_reference(p, spec));
  }
}

TYPED_TEST(HermiteTest, InterpolationInvertsEvaluation) {
  const auto& f = this->f;
  Rng rng(32);
  for (int t = 0; t < 60; ++t) {
    const auto spec = random_spec(f, 8, 8, rng);
    const auto p = weyl::random_polynomial(f, spec.total(), rng);
    const HermiteTree<TypeParam> tree(f, spec);
    ASSERT_EQ(tree.interpolate(tree.evaluate(p)), p);
    // Values prescribed directly, checked against the reference evaluator.
    HermiteValues<TypeParam> vals;
    for (const auto c : spec.multiplicities) {
      std::vector<ElementOf<TypeParam>> block;
      for (std::size_t s = 0; s < c; ++s) block.push_back(weyl::random_element(f, rng));
      vals.blocks.push_back(std::move(block));
    }
    const auto q = tree.interpolate(vals);
    ASSERT_LT(q.degree(), weyl::Degree(spec.total()));
    ASSERT_EQ(evaluate_reference(q, spec), vals);
  }
}

TYPED_TEST(HermiteTest, EvaluationReducesHighDegreeInputs) {
  const auto& f = this->f;
  Rng rng(33);
  const auto spec = spec_of(f, {{0, 3}, {2, 1}, {-1, 2}});
  const auto p = weyl::random_polynomial(f, 40, rng);
  EXPECT_EQ(weyl::hermite_evaluate(p, spec), evaluate_reference(p, spec));
}

TYPED_TEST(HermiteTest, TaylorBlocksAreScaledDerivatives) {
  const auto& f = this->f;
  Rng rng(34);
  const auto spec = HermiteSpec<TypeParam>::uniform(random_points(f, 5, rng), 6);
  const HermiteTree<TypeParam> tree(f, spec);
  const auto p = weyl::random_polynomial(f, 30, rng);
  const auto taylor = tree.taylor_expand(p);
  const auto values = evaluate_reference(p, spec);
  auto fact = f.one();
  for (std::size_t s = 0; s < 6; ++s) {
    if (s > 0) fact = fact * f.from_integer(static_cast<std::int64_t>(s));
    for (std::size_t j = 0; j < 5; ++j) ASSERT_EQ(taylor[j][s] * fact, values.blocks[j][s]);
  }
  EXPECT_EQ(tree.interpolate_taylor(taylor), p.truncated(30));
}

TEST(HermiteLarge, RoundTripAtDegree255) {
  Rng rng(35);
  for (int t = 0; t < 5; ++t) {
    HermiteSpec<PrimeField> spec;
    while (spec.total() < 256) {
      spec = HermiteSpec<PrimeField>{random_points(kP31, 1 + rng.below(8), rng), {}};
      for (std::size_t j = 0; j < spec.points.size(); ++j) spec.multiplicities.push_back(1 + rng.below(64));
    }
    const auto p = weyl::random_polynomial(kP31, 256, rng);
    EXPECT_EQ(weyl::hermite_interpolate(kP31, weyl::hermite_evaluate(p, spec), spec), p);
  }
}

TEST(HermiteGuard, SmallCharacteristic) {
  const PrimeField f(5);
  HermiteSpec<PrimeField> spec{{f.zero()}, {6}};
  EXPECT_THROW(weyl::hermite_evaluate(Polynomial<PrimeField>(f, {f.one()}), spec), weyl::CharacteristicTooSmall);
}

}  // namespace
}  // namespace weyltest
