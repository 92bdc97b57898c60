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

using weyl::Algorithm;
using weyl::BlockDiagonalMatrix;
using weyl::BlockEvalPlan;
using weyl::Matrix;

template <class F>
class WeylMulTest : public ::testing::Test {
 protected:
  F f = test_field<F>();
  DiffOperator<F> op(std::string_view text) const { return weyl::parse_operator(f, text); }
  ElementOf<F> n(std::int64_t v) const { return f.from_integer(v); }
};
TYPED_TEST_SUITE(WeylMulTest, FieldTypes, FieldNames);

// ---- conjugation -------------------------------------------------------------

TYPED_TEST(WeylMulTest, ConjugateExamples) {
  const auto alpha = this->n(5);
  EXPECT_EQ(weyl::conjugate_exp(this->op("D"), alpha), this->op("D + 5"));
  const auto l = this->op("x^2*D^3 - 4*x*D + 9");
  EXPECT_EQ(weyl::conjugate_exp(l, this->n(0)), l);
  EXPECT_EQ(weyl::conjugate_exp(this->op("D^2"), this->n(1)), this->op("D^2 + 2*D + 1"));
}

TYPED_TEST(WeylMulTest, ConjugationLaw) {
  Rng rng(71);
  for (int t = 0; t < 60; ++t) {
    const auto l = random_small_operator(this->f, {5, 5}, rng);
    const auto p = weyl::random_polynomial(this->f, rng.below(10), rng);
    const auto alpha = this->n(rng.between(-9, 9));
    ASSERT_EQ(weyl::apply(weyl::conjugate_exp(l, alpha), p), apply_at_exponential(l, p, alpha));
  }
}

TYPED_TEST(WeylMulTest, TruncatedConjugatesExamples) {
  const auto& f = this->f;
  const auto l = this->op("3*x*D^2 + D - x^2");
  // d = r gives a single point at 0.
  const auto single = BlockEvalPlan<TypeParam>::for_bidegree(f, 3, 3);
  ASSERT_EQ(single.count(), 1u);
  const auto same = weyl::truncated_conjugates(l, single, 3);
  ASSERT_EQ(same.size(), 1u);
  EXPECT_EQ(same[0], l);

  // Points {0, 1}: y^2 = 0 + 0*y + ... at 0 and 1 + 2*(y-1) + ... at 1.
  const auto two = BlockEvalPlan<TypeParam>::for_bidegree(f, 1, 2);
  ASSERT_EQ(two.count(), 2u);
  const auto blocks = weyl::truncated_conjugates(this->op("D^2"), two, 2);
  EXPECT_TRUE(blocks[0].is_zero());
  EXPECT_EQ(blocks[1], this->op("1 + 2*D"));
}

TYPED_TEST(WeylMulTest, TruncatedConjugatesMatchReferencePath) {
  Rng rng(72);
  for (int t = 0; t < 40; ++t) {
    const auto l = random_small_operator(this->f, {6, 6}, rng);
    const auto plan = BlockEvalPlan<TypeParam>::for_bidegree(this->f, 1 + rng.below(3), 1 + rng.below(12));
    const std::size_t trunc = 1 + rng.below(8);
    const auto conj = weyl::truncated_conjugates(l, plan, trunc);
    ASSERT_EQ(conj.size(), plan.count());
    for (std::size_t j = 0; j < plan.count(); ++j) {
      ASSERT_EQ(conj[j], weyl::truncate_order(weyl::conjugate_exp(l, plan.points[j]), trunc));
    }
  }
}

// ---- evaluation matrices --------------------------------------------------

TYPED_TEST(WeylMulTest, PhiMatrixExamples) {
  const auto& f = this->f;
  // x: x^m -> x^(m+1)
  const auto mx = weyl::phi_matrix(this->op("x"), 2).mat;
  ASSERT_EQ(mx.rows(), 4u);
  ASSERT_EQ(mx.cols(), 2u);
  Matrix<TypeParam> expect_x(f, 4, 2);
  expect_x(1, 0) = f.one();
  expect_x(2, 1) = f.one();
  EXPECT_EQ(mx, expect_x);

  // D: x^m -> m x^(m-1)
  const auto md = weyl::phi_matrix(this->op("D"), 2).mat;
  Matrix<TypeParam> expect_d(f, 3, 2);
  expect_d(0, 1) = f.one();
  EXPECT_EQ(md, expect_d);

  // x*D has eigenvalues 0, 1, 2 on x^0, x^1, x^2.
  const auto me = weyl::phi_matrix(this->op("x*D"), 3);
  EXPECT_EQ(me.k, 3u);
  EXPECT_EQ(me.dx, 2u);
  Matrix<TypeParam> expect_e(f, 5, 3);
  for (std::int64_t m = 0; m < 3; ++m) expect_e(m, m) = this->n(m);
  EXPECT_EQ(me.mat, expect_e);
}

TYPED_TEST(WeylMulTest, PhiMatrixMatchesSymbolicAction) {
  Rng rng(73);
  for (int t = 0; t < 60; ++t) {
    const auto l = random_small_operator(this->f, {7, 7}, rng);
    const std::size_t k = 1 + rng.below(12);
    const auto m = weyl::phi_matrix(l, k);
    ASSERT_EQ(m.mat, phi_reference(l, k, l.degree_bound()));
  }
}

TYPED_TEST(WeylMulTest, PhiInverseExamples) {
  const auto& f = this->f;
  EXPECT_TRUE(weyl::phi_inverse(Matrix<TypeParam>(f, 6, 4), 3, 2).is_zero());
  Matrix<TypeParam> diag(f, 4, 3);
  for (std::int64_t m = 0; m < 3; ++m) diag(m, m) = this->n(m);
  EXPECT_EQ(weyl::phi_inverse(diag, 2, 2), this->op("x*D"));
  // The same diagonal does not fit degree bound 1.
  EXPECT_THROW(weyl::phi_inverse(diag, 1, 2), weyl::InconsistentMatrix);
}

TYPED_TEST(WeylMulTest, PhiInverseRoundTrip) {
  Rng rng(74);
  for (int t = 0; t < 60; ++t) {
    const auto l = random_small_operator(this->f, {7, 7}, rng);
    const std::size_t k = l.order_bound() + rng.below(5);
    const auto back = weyl::phi_inverse(weyl::phi_matrix(l, k), l.degree_bound(), l.order_bound());
    ASSERT_EQ(back, l);
  }
}

TYPED_TEST(WeylMulTest, PhiInverseRejectsInconsistentMatrices) {
  const auto& f = this->f;
  // Needs D^2, beyond rbound = 2.
  Matrix<TypeParam> high_order(f, 3, 3);
  high_order(0, 2) = f.one();
  EXPECT_THROW(weyl::phi_inverse(high_order, 1, 2), weyl::InconsistentMatrix);
  // Raises the degree by 2 with dx = 1.
  Matrix<TypeParam> high_degree(f, 3, 3);
  high_degree(2, 0) = f.one();
  EXPECT_THROW(weyl::phi_inverse(high_degree, 1, 3), weyl::InconsistentMatrix);
  EXPECT_THROW(weyl::phi_inverse(Matrix<TypeParam>(f, 2, 4), 3, 2), weyl::ShapeMismatch);
  EXPECT_THROW(weyl::phi_inverse(Matrix<TypeParam>(f, 6, 2), 3, 3), weyl::PreconditionViolated);
}

TYPED_TEST(WeylMulTest, PhiMatrixFactorisation) {
  Rng rng(75);
  for (int t = 0; t < 60; ++t) {
    const auto k = random_small_operator(this->f, {5, 5}, rng);
    const auto l = random_small_operator(this->f, {5, 5}, rng);
    const std::size_t cols = 1 + rng.below(10);
    const std::size_t dk = k.degree_bound(), dl = l.degree_bound();
    const auto lhs = weyl::phi_matrix(weyl::naive_mul(k, l), cols, dk + dl).mat;
    const auto rhs = weyl::mat_mul(weyl::phi_matrix(k, cols + dl).mat, weyl::phi_matrix(l, cols).mat);
    ASSERT_EQ(lhs, rhs);
  }
}

TEST(PhiMatrixGuard, SmallCharacteristic) {
  const PrimeField f(7);
  EXPECT_THROW(weyl::phi_matrix(weyl::parse_operator(f, "x^3*D"), 4), weyl::CharacteristicTooSmall);
  EXPECT_NO_THROW(weyl::phi_matrix(weyl::parse_operator(f, "x*D"), 4));
}

// ---- block evaluation ---------------------------------------------------------

TYPED_TEST(WeylMulTest, BlockPhiMatchesExponentialAction) {
  Rng rng(76);
  for (int t = 0; t < 30; ++t) {
    const auto l = random_small_operator(this->f, {4, 8}, rng);
    const auto plan = BlockEvalPlan<TypeParam>::for_bidegree(this->f, 1 + rng.below(4), 1 + rng.below(12));
    const std::size_t k = 1 + rng.below(8);
    const auto blocks = weyl::block_phi(l, plan, k, k + rng.below(3));
    ASSERT_EQ(blocks.block_count(), plan.count());
    for (std::size_t j = 0; j < plan.count(); ++j) {
      ASSERT_EQ(blocks.blocks[j], exponential_block_reference(l, plan.points[j], k, l.degree_bound()));
    }
  }
}

TYPED_TEST(WeylMulTest, BlockPhiOfDerivation) {
  const auto plan = BlockEvalPlan<TypeParam>::for_bidegree(this->f, 1, 3);
  const auto blocks = weyl::block_phi(this->op("D"), plan, 3, 3);
  for (std::size_t j = 0; j < plan.count(); ++j) {
    // (D + a)(x^m) = a x^m + m x^(m-1)
    Matrix<TypeParam> expect(this->f, 4, 3);
    for (std::size_t m = 0; m < 3; ++m) {
      expect(m, m) = plan.points[j];
      if (m > 0) expect(m - 1, m) = this->n(static_cast<std::int64_t>(m));
    }
    EXPECT_EQ(blocks.blocks[j], expect);
  }
}

TYPED_TEST(WeylMulTest, BlockPhiAtSinglePointIsPhiOfTruncation) {
  Rng rng(77);
  const auto l = random_small_operator(this->f, {5, 7}, rng);
  const auto plan = BlockEvalPlan<TypeParam>::for_bidegree(this->f, 8, 8);
  ASSERT_EQ(plan.count(), 1u);
  const auto blocks = weyl::block_phi(l, plan, 4, 4);
  EXPECT_EQ(blocks.blocks.at(0), weyl::phi_matrix(weyl::truncate_order(l, 4), 4).mat);
  EXPECT_THROW(weyl::block_phi(l, plan, 4, 3), weyl::PreconditionViolated);
}

TYPED_TEST(WeylMulTest, BlockPhiInverseRoundTrip) {
  Rng rng(78);
  for (int t = 0; t < 30; ++t) {
    const std::size_t d = 1 + rng.below(5), r = 1 + rng.below(20);
    const auto l = weyl::random_operator(this->f, {d, r}, rng);
    const auto plan = BlockEvalPlan<TypeParam>::for_bidegree(this->f, d, r);
    const std::size_t k = plan.trunc_out;
    ASSERT_GE(plan.count() * k, r);
    const auto blocks = weyl::block_phi(l, plan, k, k);
    ASSERT_EQ(weyl::block_phi_inverse(blocks, plan, d, r), l);
  }
}

TYPED_TEST(WeylMulTest, BlockPhiInverseEdgeCases) {
  const auto& f = this->f;
  const auto plan = BlockEvalPlan<TypeParam>::for_bidegree(f, 2, 7);
  ASSERT_EQ(plan.count(), 4u);
  BlockDiagonalMatrix<TypeParam> zero;
  for (std::size_t j = 0; j < plan.count(); ++j) zero.blocks.emplace_back(f, 6, 4);
  EXPECT_TRUE(weyl::block_phi_inverse(zero, plan, 3, 7).is_zero());

  BlockDiagonalMatrix<TypeParam> short_list{{Matrix<TypeParam>(f, 6, 4)}};
  EXPECT_THROW(weyl::block_phi_inverse(short_list, plan, 3, 7), weyl::BlockCountMismatch);
  EXPECT_THROW(weyl::block_phi_inverse(zero, plan, 3, 17), weyl::PreconditionViolated);

  // One point: agrees with the plain inverse.
  Rng rng(79);
  const auto l = weyl::random_operator(f, {3, 3}, rng);
  const auto single = BlockEvalPlan<TypeParam>::for_bidegree(f, 3, 3);
  const auto m = weyl::phi_matrix(l, 6).mat;
  EXPECT_EQ(weyl::block_phi_inverse(BlockDiagonalMatrix<TypeParam>{{m}}, single, 3, 3), weyl::phi_inverse(m, 3, 3));
}

TYPED_TEST(WeylMulTest, BlockPhiInverseDetectsCorruption) {
  const auto& f = this->f;
  Rng rng(80);
  const auto l = weyl::random_operator(f, {2, 6}, rng);
  const auto plan = BlockEvalPlan<TypeParam>::for_bidegree(f, 2, 6);
  auto blocks = weyl::block_phi(l, plan, plan.trunc_out, plan.trunc_out);
  // Perturbing one Taylor coefficient at one point raises the interpolated
  // order past rbound.
  blocks.blocks[1](0, 0) += f.one();
  EXPECT_THROW(weyl::block_phi_inverse(blocks, plan, 2, 6), weyl::InconsistentMatrix);
}

// ---- multiplication -----------------------------------------------------------

TYPED_TEST(WeylMulTest, TallExamples) {
  EXPECT_EQ(weyl::mul_tall(this->op("D"), this->op("x")), this->op("x*D + 1"));
  const auto l = this->op("x*D^5 + 3*D^2 - x");
  EXPECT_EQ(weyl::mul_tall(this->op("1"), l), l);
  EXPECT_THROW(weyl::mul_tall(this->op("x^3"), this->op("x*D")), weyl::PreconditionViolated);
}

TYPED_TEST(WeylMulTest, TallMatchesNaive) {
  Rng rng(81);
  const Bidegree profiles[] = {{8, 8}, {4, 16}, {2, 32}};
  const int count = std::is_same_v<TypeParam, PrimeField> ? 300 : 60;
  for (int t = 0; t < count; ++t) {
    const auto bound = profiles[t % 3];
    const auto k = random_small_operator(this->f, bound, rng);
    const auto l = weyl::random_operator(this->f, bound, rng);
    ASSERT_EQ(weyl::mul_tall(k, l), weyl::naive_mul(k, l)) << weyl::to_string(k) << " | " << weyl::to_string(l);
  }
}

TYPED_TEST(WeylMulTest, WideExamples) {
  EXPECT_EQ(weyl::mul_wide(this->op("x^2"), this->op("D")), this->op("x^2*D"));
  EXPECT_EQ(weyl::mul_wide(this->op("x^2"), this->op("x*D")), this->op("x^3*D"));
  // Joint bidegree (2, 2) is not wide.
  EXPECT_THROW(weyl::mul_wide(this->op("D"), this->op("x")), weyl::PreconditionViolated);
}

TYPED_TEST(WeylMulTest, WideMatchesNaive) {
  Rng rng(82);
  const Bidegree profiles[] = {{16, 4}, {32, 2}};
  const int count = std::is_same_v<TypeParam, PrimeField> ? 300 : 60;
  for (int t = 0; t < count; ++t) {
    const auto bound = profiles[t % 2];
    const auto k = random_small_operator(this->f, bound, rng);
    const auto l = weyl::random_operator(this->f, bound, rng);
    ASSERT_EQ(weyl::mul_wide(k, l), weyl::naive_mul(k, l));
  }
}

TYPED_TEST(WeylMulTest, DispatchExamples) {
  for (const auto algorithm : {Algorithm::Auto, Algorithm::Naive, Algorithm::Fast}) {
    EXPECT_EQ(weyl::mul(this->op("D"), this->op("x"), algorithm), this->op("x*D + 1"));
    EXPECT_TRUE(weyl::mul(this->op("0"), this->op("x*D^3"), algorithm).is_zero());
    EXPECT_TRUE(weyl::mul(this->op("x*D^3"), this->op("0"), algorithm).is_zero());
  }
}

TYPED_TEST(WeylMulTest, DispatchMatchesNaiveOnMixedProfiles) {
  Rng rng(83);
  const bool prime = std::is_same_v<TypeParam, PrimeField>;
  std::vector<Bidegree> profiles = {{8, 8}, {16, 4}, {4, 16}};
  if (prime) profiles.insert(profiles.end(), {{64, 16}, {16, 64}});
  for (const auto bound : profiles) {
    for (int t = 0; t < 6; ++t) {
      const auto k = weyl::random_operator(this->f, bound, rng);
      const auto l = random_small_operator(this->f, bound, rng);
      const auto expected = weyl::naive_mul(k, l);
      for (const auto algorithm : {Algorithm::Auto, Algorithm::Fast}) {
        const auto got = weyl::mul(k, l, algorithm);
        ASSERT_EQ(got, expected);
        ASSERT_LT(got.degree_bound(), k.degree_bound() + l.degree_bound());
        ASSERT_LT(got.order_bound(), k.order_bound() + l.order_bound());
      }
    }
  }
}

TYPED_TEST(WeylMulTest, Associativity) {
  Rng rng(84);
  for (int t = 0; t < 40; ++t) {
    const auto a = random_small_operator(this->f, {6, 6}, rng);
    const auto b = random_small_operator(this->f, {6, 6}, rng);
    const auto c = random_small_operator(this->f, {6, 6}, rng);
    ASSERT_EQ(weyl::mul(weyl::mul(a, b, Algorithm::Fast), c, Algorithm::Fast),
              weyl::mul(a, weyl::mul(b, c, Algorithm::Fast), Algorithm::Fast));
  }
}

TYPED_TEST(WeylMulTest, EvaluationHomomorphism) {
  Rng rng(85);
  for (int t = 0; t < 40; ++t) {
    const auto k = random_small_operator(this->f, {8, 8}, rng);
    const auto l = random_small_operator(this->f, {8, 8}, rng);
    const auto p = weyl::random_polynomial(this->f, rng.below(21), rng);
    ASSERT_EQ(weyl::apply(weyl::mul(k, l, Algorithm::Fast), p), apply_reference(k, apply_reference(l, p)));
  }
}

TEST(WeylMulThreads, ResultIndependentOfThreadCount) {
  Rng rng(86);
  const auto k = weyl::random_operator(kP31, {12, 40}, rng);
  const auto l = weyl::random_operator(kP31, {12, 40}, rng);
  const auto serial = weyl::mul(k, l, Algorithm::Fast);
  weyl::ScopedSettings scoped;
  weyl::settings().threads = 4;
  EXPECT_EQ(weyl::mul(k, l, Algorithm::Fast), serial);
}

TEST(WeylMulSmallField, FallsBackOrThrows) {
  const PrimeField f(101);
  Rng rng(87);
  // 8 * max(d, r) = 160 exceeds the characteristic.
  const auto k = weyl::random_operator(f, {20, 20}, rng);
  const auto l = weyl::random_operator(f, {20, 20}, rng);
  EXPECT_EQ(weyl::mul(k, l), weyl::naive_mul(k, l));
  EXPECT_THROW(weyl::mul(k, l, Algorithm::Fast), weyl::CharacteristicTooSmall);
  EXPECT_EQ(weyl::mul(k, l, Algorithm::Naive), weyl::naive_mul(k, l));
  // Too large for the fallback.
  const auto big_k = weyl::random_operator(f, {80, 80}, rng);
  const auto big_l = weyl::random_operator(f, {80, 80}, rng);
  EXPECT_THROW(weyl::mul(big_k, big_l), weyl::CharacteristicTooSmall);
}

TEST(WeylMulSmallField, AllPathsAgreeWhenCharacteristicSuffices) {
  const PrimeField f(1009);
  Rng rng(88);
  for (int t = 0; t < 20; ++t) {
    const auto k = random_small_operator(f, {12, 30}, rng);
    const auto l = random_small_operator(f, {12, 30}, rng);
    ASSERT_EQ(weyl::mul(k, l, Algorithm::Fast), weyl::naive_mul(k, l));
  }
}

TEST(AlgorithmNames, ParseAndPrint) {
  for (const auto a : {Algorithm::Auto, Algorithm::Naive, Algorithm::Fast}) {
    EXPECT_EQ(weyl::parse_algorithm(weyl::to_string(a)), a);
  }
  EXPECT_THROW(weyl::parse_algorithm("quick"), weyl::ParseError);
}

}  // namespace
}  // namespace weyltest
