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

template <class F>
class ReflectionTest : public ::testing::Test {
 protected:
  F f = test_field<F>();
  DiffOperator<F> op(std::string_view text) const { return weyl::parse_operator(f, text); }
};
TYPED_TEST_SUITE(ReflectionTest, FieldTypes, FieldNames);

TYPED_TEST(ReflectionTest, GeneratorImages) {
  for (const auto& reflect : {weyl::reflect_naive<TypeParam>, weyl::reflect_fast<TypeParam>}) {
    EXPECT_EQ(reflect(this->op("x")), this->op("D"));
    EXPECT_EQ(reflect(this->op("D")), this->op("-x"));
    EXPECT_EQ(reflect(this->op("x*D")), this->op("-x*D - 1"));
    EXPECT_EQ(reflect(this->op("7")), this->op("7"));
    EXPECT_TRUE(reflect(this->op("0")).is_zero());
  }
  EXPECT_EQ(weyl::reflect_inverse(this->op("D")), this->op("x"));
  EXPECT_EQ(weyl::reflect_inverse(this->op("-x")), this->op("D"));
}

TYPED_TEST(ReflectionTest, NaiveMatchesMonomialRewrite) {
  Rng rng(61);
  for (int t = 0; t < 60; ++t) {
    const auto l = random_small_operator(this->f, {6, 6}, rng);
    ASSERT_EQ(weyl::reflect_naive(l), reflect_reference(l));
  }
}

TYPED_TEST(ReflectionTest, FastMatchesNaive) {
  Rng rng(62);
  const Bidegree bounds[] = {{16, 16}, {32, 4}, {4, 32}};
  for (int t = 0; t < 300; ++t) {
    const auto l = random_small_operator(this->f, bounds[t % 3], rng);
    const auto fast = weyl::reflect_fast(l);
    ASSERT_EQ(fast, weyl::reflect_naive(l)) << weyl::to_string(l);
    // The reflection swaps the two bounds.
    ASSERT_EQ(fast.bidegree(), (Bidegree{l.bidegree().order, l.bidegree().degree}));
  }
}

TYPED_TEST(ReflectionTest, AlgebraicLaws) {
  Rng rng(63);
  for (int t = 0; t < 100; ++t) {
    const auto l = random_small_operator(this->f, {12, 12}, rng);
    ASSERT_EQ(weyl::reflect_fast(weyl::reflect_fast(l)), weyl::psi(l));
    ASSERT_EQ(weyl::reflect_inverse(weyl::reflect_fast(l)), l);
    ASSERT_EQ(weyl::reflect_fast(weyl::reflect_inverse(l)), l);
    const auto k = random_small_operator(this->f, {6, 6}, rng);
    const auto m = random_small_operator(this->f, {6, 6}, rng);
    ASSERT_EQ(weyl::reflect_fast(weyl::naive_mul(k, m)),
              weyl::naive_mul(weyl::reflect_fast(k), weyl::reflect_fast(m)));
  }
}

TEST(ReflectionGuard, SmallCharacteristic) {
  const PrimeField f(5);
  const auto l = weyl::parse_operator(f, "x^4*D^3");
  EXPECT_THROW(weyl::reflect_fast(l), weyl::CharacteristicTooSmall);
  EXPECT_THROW(weyl::reflect_inverse(l), weyl::CharacteristicTooSmall);
}

}  // namespace
}  // namespace weyltest
