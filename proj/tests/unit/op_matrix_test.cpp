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

#include "opmivp/error.hpp"
#include "opmivp/expr.hpp"
#include "opmivp/op_matrix.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace opmivp {
namespace {

IntegrableFunction fn(std::string_view src) { return IntegrableFunction::from_expr(parse(src)); }

TEST(Theta, SmallExamples) {
  const auto t0 = build_theta(0);
  ASSERT_EQ(t0.entries.rows(), 1);
  EXPECT_EQ(t0(0, 0), 0.5);

  const auto t1 = build_theta(1);
  const double s = 1.0 / (2.0 * std::sqrt(3.0));
  EXPECT_EQ(t1(0, 0), 0.5);
  EXPECT_NEAR(t1(0, 1), s, 1e-16);
  EXPECT_NEAR(t1(1, 0), -s, 1e-16);
  EXPECT_EQ(t1(1, 1), 0.0);

  EXPECT_NEAR(build_theta(2)(1, 2), 1.0 / (2.0 * std::sqrt(15.0)), 1e-16);
  const auto exact = theta_entry_exact(1, 2);
  EXPECT_EQ(exact.coeff, Rational(1, 30));
  EXPECT_EQ(exact.radicand, 15);
}

TEST(Theta, SkewPatternAndBand) {
  const auto t = build_theta(9);
  Eigen::MatrixXd sum = t.entries + t.entries.transpose();
  sum(0, 0) -= 1.0;
  EXPECT_LE(sum.cwiseAbs().maxCoeff(), 1e-15);
  for (int i = 0; i <= 9; ++i)
    for (int j = 0; j <= 9; ++j)
      if (std::abs(i - j) > 1) EXPECT_EQ(t(i, j), 0.0);
  for (int i = 1; i <= 9; ++i) EXPECT_EQ(t(i, i), 0.0);
}

TEST(Theta, IdentityHoldsExactlyBelowLastRow) {
  const auto basis = gram_schmidt_basis(5);
  const auto check = verify_theta_identity(basis, build_theta(5));
  EXPECT_EQ(check.max_defect, 0.0);
  ASSERT_EQ(check.row_defects.size(), 6u);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(check.row_defects[static_cast<std::size_t>(i)], 0.0);
  // The dropped term is phi_6 / (2 sqrt(143)); its largest coefficient is 3150 sqrt(13).
  EXPECT_NEAR(check.row_defects[5], 3150.0 / (2.0 * std::sqrt(11.0)), 1e-9);
  EXPECT_LE(check.max_entry_error, 1e-16);
}

TEST(Theta, FirstRowIsIntegralOfOne) {
  const auto check = verify_theta_identity(gram_schmidt_basis(1), build_theta(1));
  EXPECT_EQ(check.row_defects[0], 0.0);
}

TEST(Theta, DimensionMismatch) {
  EXPECT_THROW((void)verify_theta_identity(gram_schmidt_basis(3), build_theta(4)), DimensionMismatch);
}

TEST(ProductMatrix, ConstantFunctions) {
  const auto basis = gram_schmidt_basis(6);
  const auto one = build_product_matrix(basis, IntegrableFunction::constant(1.0));
  EXPECT_LE((one.entries - Eigen::MatrixXd::Identity(7, 7)).cwiseAbs().maxCoeff(), 1e-13);
  const auto three = build_product_matrix(basis, IntegrableFunction::constant(3.0), ProductMode::Direct);
  EXPECT_LE((three.entries - 3.0 * Eigen::MatrixXd::Identity(7, 7)).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_EQ(three.kind, OpMatrixKind::ProductLinearization);
}

TEST(ProductMatrix, IdentityFunctionOrderOne) {
  const auto m = build_product_matrix(gram_schmidt_basis(1), fn("x"));
  const double s = 1.0 / (2.0 * std::sqrt(3.0));
  EXPECT_NEAR(m(0, 0), 0.5, 1e-15);
  EXPECT_NEAR(m(0, 1), s, 1e-15);
  EXPECT_NEAR(m(1, 0), s, 1e-15);
  EXPECT_NEAR(m(1, 1), 0.5, 1e-15);
}

TEST(ProductMatrix, LinearInTheFunction) {
  const auto basis = gram_schmidt_basis(8);
  const auto f = fn("exp(-x)*sin(2*x)");
  const auto g = fn("tan(x)");
  const double a = 1.75;
  const double b = -0.4;
  for (auto mode : {ProductMode::Paper, ProductMode::Direct}) {
    const auto mf = build_product_matrix(basis, f, mode);
    const auto mg = build_product_matrix(basis, g, mode);
    const auto mc = build_product_matrix(basis, a * f + b * g, mode);
    EXPECT_LE((mc.entries - (a * mf.entries + b * mg.entries)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(ProductMatrix, DirectModeMatchesSimpsonOracle) {
  const int n = 5;
  const auto basis = gram_schmidt_basis(n);
  const auto m = build_product_matrix(basis, fn("tan(x)"), ProductMode::Direct);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const double ref = testing::simpson_richardson([i, j](double x) {
        return std::tan(x) * testing::shifted_legendre_orthonormal(i, x) * testing::shifted_legendre_orthonormal(j, x);
      });
      EXPECT_NEAR(m(i, j), ref, 1e-11) << i << "," << j;
    }
}

TEST(ProductMatrix, PaperModeUsesTruncatedFunction) {
  // With f of degree n + 1 the paper mode drops the top term, the direct mode keeps it.
  const int n = 3;
  const auto basis = gram_schmidt_basis(n);
  const auto f = fn("x^4");
  const auto paper = build_product_matrix(basis, f, ProductMode::Paper);
  const auto direct = build_product_matrix(basis, f, ProductMode::Direct);
  EXPECT_GT((paper.entries - direct.entries).cwiseAbs().maxCoeff(), 1e-4);
  const auto g = fn("1 + x^3");
  EXPECT_LE((build_product_matrix(basis, g, ProductMode::Paper).entries -
             build_product_matrix(basis, g, ProductMode::Direct).entries)
                .cwiseAbs()
                .maxCoeff(),
            1e-14);
}

TEST(ProductMatrix, SymmetricForAnyFunction) {
  const auto m = build_product_matrix(gram_schmidt_basis(9), fn("2*cos(x)^2"));
  EXPECT_LE((m.entries - m.entries.transpose()).cwiseAbs().maxCoeff(), 1e-14);
}

}  // namespace
}  // namespace opmivp
