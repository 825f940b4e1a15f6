// Copyright 2026 The opmivp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "opmivp/bernoulli_basis.hpp"
#include "opmivp/diagnostics.hpp"
#include "opmivp/error.hpp"

#include "appendix_a.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <thread>

namespace opmivp {
namespace {

SqrtScaled published(int k) {
  const auto& m = testing::published_basis()[static_cast<std::size_t>(k)];
  std::vector<Rational> c(m.coeffs.begin(), m.coeffs.end());
  return SqrtScaled::normalized(m.radicand, RationalPoly(std::move(c)));
}

TEST(BernoulliNumbers, Examples) {
  const auto b = bernoulli_numbers(4);
  EXPECT_EQ(b[0], 1);
  EXPECT_EQ(b[1], Rational(-1, 2));
  EXPECT_EQ(b[4], Rational(-1, 30));
}

TEST(BernoulliNumbers, MatchRecurrenceOracle) {
  const auto ours = bernoulli_numbers(20);
  const auto oracle = testing::bernoulli_by_recurrence(20);
  ASSERT_EQ(ours.size(), oracle.size());
  for (std::size_t k = 0; k < ours.size(); ++k) EXPECT_EQ(ours[k], oracle[k]) << "k = " << k;
}

TEST(BernoulliPolynomial, Examples) {
  EXPECT_EQ(bernoulli_polynomial(0), RationalPoly::constant(1));
  EXPECT_EQ(bernoulli_polynomial(2), (RationalPoly{Rational(1, 6), -1, 1}));
  EXPECT_EQ(bernoulli_polynomial(3), (RationalPoly{0, Rational(1, 2), Rational(-3, 2), 1}));
  EXPECT_EQ(bernoulli_polynomial(4), (RationalPoly{Rational(-1, 30), 0, 1, -2, 1}));
}

TEST(BernoulliPolynomial, OrthogonalToConstant) {
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(inner_product(bernoulli_polynomial(n), RationalPoly::constant(1)), 0);
}

TEST(Squarefree, Split) {
  const auto s = squarefree_split(12);
  EXPECT_EQ(s.square_part, 2);
  EXPECT_EQ(s.squarefree_part, 3);
  const auto t = squarefree_split(BigInt(4) * 9 * 49 * 11 * 13);
  EXPECT_EQ(t.square_part, 42);
  EXPECT_EQ(t.squarefree_part, 143);
  EXPECT_EQ(squarefree_split(1).squarefree_part, 1);
}

TEST(SqrtScaled, NormalizationAndPrinting) {
  const auto s = SqrtScaled::normalized(12, RationalPoly{1, 1});
  EXPECT_EQ(s.radicand, 3);
  EXPECT_EQ(s.rational_part, (RationalPoly{2, 2}));
  EXPECT_EQ(s.to_string(), "sqrt(3) * [2, 2]");
  EXPECT_TRUE(s.equal_up_to_sign(SqrtScaled{3, RationalPoly{-2, -2}}));
}

TEST(GramSchmidt, MembersFromAppendix) {
  const auto basis = gram_schmidt_basis(6);
  EXPECT_EQ(basis.member(0), (SqrtScaled{1, RationalPoly{1}}));
  EXPECT_EQ(basis.member(2), (SqrtScaled{5, RationalPoly{1, -6, 6}}));
  EXPECT_EQ(basis.member(6), (SqrtScaled{13, RationalPoly{1, -42, 420, -1680, 3150, -2772, 924}}));
  EXPECT_EQ(basis.member(4), published(4));
}

TEST(GramSchmidt, AllTenUpToSign) {
  const auto basis = gram_schmidt_basis(9);
  for (int k = 0; k <= 9; ++k) EXPECT_TRUE(basis.member(k).equal_up_to_sign(published(k))) << "k = " << k;
  // The published phi_8 carries the opposite overall sign.
  EXPECT_FALSE(basis.member(8) == published(8));
}

TEST(GramSchmidt, ExactOrthonormality) {
  const auto basis = gram_schmidt_basis(kDefaultMaxOrder);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto ip = inner_product(basis.member(i), basis.member(j));
      EXPECT_EQ(ip.coeff, i == j ? 1 : 0) << i << "," << j;
    }
}

TEST(GramSchmidt, DegreeAndSign) {
  const auto basis = gram_schmidt_basis(kDefaultMaxOrder);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    EXPECT_EQ(basis.member(k).degree(), static_cast<int>(k));
    EXPECT_GT(basis.member(k).rational_part.leading(), 0);
  }
}

TEST(GramSchmidt, OrderLimit) {
  EXPECT_THROW(gram_schmidt_basis(kDefaultMaxOrder + 1), OrderTooLarge);
  EXPECT_NO_THROW(gram_schmidt_basis(14, BasisOptions{14}));
  EXPECT_THROW(gram_schmidt_basis(-1), InputError);
}

TEST(GramSchmidt, PrefixMatchesSmallerBasis) {
  const auto big = gram_schmidt_basis(9);
  const auto small = gram_schmidt_basis(5);
  const auto pre = big.prefix(5);
  ASSERT_EQ(pre.size(), small.size());
  for (std::size_t k = 0; k < pre.size(); ++k) EXPECT_EQ(pre.member(k), small.member(k));
}

TEST(EvalBasis, Examples) {
  const auto b1 = gram_schmidt_basis(1);
  auto v = eval_basis(b1, 0.0);
  EXPECT_DOUBLE_EQ(v[0], 1.0);
  EXPECT_NEAR(v[1], -std::sqrt(3.0), 1e-15);
  v = eval_basis(b1, 0.5);
  EXPECT_DOUBLE_EQ(v[0], 1.0);
  EXPECT_NEAR(v[1], 0.0, 1e-15);
  v = eval_basis(gram_schmidt_basis(2), 1.0);
  EXPECT_NEAR(v[1], std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(v[2], std::sqrt(5.0), 1e-15);
}

TEST(EvalBasis, AgreesWithLegendreRecurrence) {
  const auto basis = gram_schmidt_basis(kDefaultMaxOrder);
  for (int i = 0; i <= 200; ++i) {
    const double x = i / 200.0;
    const auto v = basis.eval(x);
    for (int k = 0; k <= kDefaultMaxOrder; ++k)
      EXPECT_NEAR(v[static_cast<std::size_t>(k)], testing::shifted_legendre_orthonormal(k, x), 1e-12)
          << "k = " << k << ", x = " << x;
  }
}

TEST(EvalBasis, CombinationMatchesSum) {
  const auto basis = gram_schmidt_basis(9);
  const std::vector<double> c{0.3, -1.0, 0.25, 0.0, 2.0, -0.5, 0.125, 0.0, 1e-3, -7.0};
  for (double x : {0.0, 0.17, 0.5, 0.93, 1.0}) {
    const auto v = basis.eval(x);
    double s = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * v[k];
    EXPECT_NEAR(basis.eval_combination(c, x), s, 1e-12);
  }
}

TEST(EvalBasis, WarnsOutsideUnitInterval) {
  std::vector<std::string> seen;
  const auto previous = set_warning_handler([&](std::string_view m) { seen.emplace_back(m); });
  const auto basis = gram_schmidt_basis(2);
  (void)basis.eval(0.5);
  EXPECT_TRUE(seen.empty());
  (void)basis.eval(1.5);
  EXPECT_EQ(seen.size(), 1u);
  set_warning_handler(previous);
}

TEST(EvalBasis, SharedAcrossThreads) {
  const auto basis = gram_schmidt_basis(9);
  std::vector<double> results(8);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < results.size(); ++t)
    threads.emplace_back([&, t] { results[t] = basis.eval(0.1 * static_cast<double>(t))[9]; });
  for (auto& th : threads) th.join();
  for (std::size_t t = 0; t < results.size(); ++t)
    EXPECT_DOUBLE_EQ(results[t], basis.eval(0.1 * static_cast<double>(t))[9]);
}

}  // namespace
}  // namespace opmivp
