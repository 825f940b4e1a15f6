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

#include "opmivp/diagnostics.hpp"
#include "opmivp/error.hpp"
#include "opmivp/expr.hpp"
#include "opmivp/projection.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace opmivp {
namespace {

IntegrableFunction fn(std::string_view src) { return IntegrableFunction::from_expr(parse(src)); }

TEST(Project, UnitVectorForBasisMember) {
  const auto basis = gram_schmidt_basis(6);
  const auto phi3 = basis.member(3);
  // phi_3 = sqrt(7) * q(x); project as a closure to exercise quadrature.
  const auto f = IntegrableFunction::closure(
      [&](double x) { return std::sqrt(7.0) * eval(phi3.rational_part, x); }, "phi_3");
  const auto c = project(f, basis);
  for (std::size_t k = 0; k < c.size(); ++k) EXPECT_NEAR(c[k], k == 3 ? 1.0 : 0.0, 1e-13) << k;
}

TEST(Project, IdentityFunction) {
  const auto c = project(fn("x"), gram_schmidt_basis(4));
  EXPECT_DOUBLE_EQ(c[0], 0.5);
  EXPECT_NEAR(c[1], 1.0 / (2.0 * std::sqrt(3.0)), 1e-16);
  for (std::size_t k = 2; k < c.size(); ++k) EXPECT_EQ(c[k], 0.0);
}

TEST(Project, ExpMatchesSimpsonOracle) {
  const auto basis = gram_schmidt_basis(6);
  const auto c = project(fn("exp(-x)"), basis);
  for (int k = 0; k <= 6; ++k) {
    const double ref = testing::simpson_richardson(
        [k](double x) { return std::exp(-x) * testing::shifted_legendre_orthonormal(k, x); });
    EXPECT_NEAR(c[static_cast<std::size_t>(k)], ref, 1e-12) << "k = " << k;
  }
}

TEST(Project, ExactPathsAgreeWithQuadrature) {
  const auto basis = gram_schmidt_basis(8);
  const auto poly = fn("3*x^5 - x^2 + 0.5");
  const auto exact = project(poly, basis);
  const auto quad = project_fixed(IntegrableFunction::closure([&](double x) { return poly(x); }, "p"), basis, 16);
  for (std::size_t k = 0; k < exact.size(); ++k) EXPECT_NEAR(exact[k], quad[k], 1e-14);
  const auto c = project(IntegrableFunction::constant(2.5), basis);
  EXPECT_EQ(c[0], 2.5);
  for (std::size_t k = 1; k < c.size(); ++k) EXPECT_EQ(c[k], 0.0);
}

TEST(Project, NonFiniteSampleIsReported) {
  try {
    (void)project(fn("1/(x - 0.5)^2 + log(x - 0.7)"), gram_schmidt_basis(3));
    FAIL() << "expected NumericalError";
  } catch (const NumericalError& e) {
    EXPECT_NE(std::string(e.what()).find("non-finite"), std::string::npos);
  }
}

TEST(Project, WarnsWhenNodeCapReached) {
  std::vector<std::string> seen;
  const auto previous = set_warning_handler([&](std::string_view m) { seen.emplace_back(m); });
  (void)project(fn("sqrt(abs(x - 0.3))"), gram_schmidt_basis(4), QuadratureOptions{64, 128, 1e-15});
  set_warning_handler(previous);
  EXPECT_FALSE(seen.empty());
}

TEST(Project, QuadratureDoublingIsStableForForcings) {
  const auto basis = gram_schmidt_basis(9);
  for (auto src : {"exp(-x)", "tan(x)", "2*cos(x)^4"}) {
    const auto f = fn(src);
    const auto a = project_fixed(f, basis, 64);
    const auto b = project_fixed(f, basis, 128);
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_LT(std::abs(a[k] - b[k]), 1e-12) << src << " k=" << k;
  }
}

TEST(ProjectExact, ParsevalAndCompleteness) {
  const auto basis = gram_schmidt_basis(7);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-20, 20);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Rational> coeffs;
    for (int k = 0; k <= 7; ++k) coeffs.emplace_back(num(rng), 1 + (trial % 5));
    const RationalPoly p(std::move(coeffs));
    const auto c = project_exact(p, basis);
    // Each coefficient is q sqrt(R); its square is q^2 R.
    Rational sum = 0;
    for (const auto& ck : c) sum += ck.coeff * ck.coeff * Rational(ck.radicand);
    EXPECT_EQ(sum, inner_product(p, p));
    EXPECT_EQ(reconstruct_exact(c, basis), p);
  }
}

TEST(ProjectExact, RejectsIrrationalCombination) {
  const auto basis = gram_schmidt_basis(1);
  const std::vector<RadicalNumber> c{{1, 1}, {1, 1}};  // 1 + phi_1 carries sqrt(3)
  EXPECT_THROW((void)reconstruct_exact(c, basis), std::domain_error);
}

TEST(Reconstruct, Examples) {
  const auto basis = gram_schmidt_basis(6);
  CoeffVector e0{6, std::vector<double>(7, 0.0)};
  e0.values[0] = 1.0;
  for (double x : {0.0, 0.4, 1.0}) EXPECT_EQ(reconstruct(e0, basis, x), 1.0);

  CoeffVector e1{1, {0.0, 1.0}};
  const auto power = coeffs_to_power_basis(e1, gram_schmidt_basis(1));
  ASSERT_EQ(power.size(), 2u);
  EXPECT_NEAR(power[0], -std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(power[1], 2.0 * std::sqrt(3.0), 1e-15);

  CoeffVector zero{3, std::vector<double>(4, 0.0)};
  const auto zp = coeffs_to_power_basis(zero, gram_schmidt_basis(3));
  for (double v : zp) EXPECT_EQ(v, 0.0);
}

TEST(Reconstruct, ExpApproximationError) {
  const auto basis = gram_schmidt_basis(6);
  const auto c = project(fn("exp(-x)"), basis);
  double worst = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double x = i / 100.0;
    worst = std::max(worst, std::abs(reconstruct(c, basis, x) - std::exp(-x)));
  }
  EXPECT_LE(worst, 1e-7);
}

TEST(Reconstruct, ProjectionIsIdempotent) {
  const auto basis = gram_schmidt_basis(9);
  const auto c = project(fn("tan(x)"), basis);
  const auto f = IntegrableFunction::closure([&](double x) { return reconstruct(c, basis, x); }, "fhat");
  const auto again = project(f, basis);
  for (std::size_t k = 0; k < c.size(); ++k) EXPECT_NEAR(again[k], c[k], 1e-12);
}

TEST(Reconstruct, PolynomialsReproducedInDouble) {
  const auto basis = gram_schmidt_basis(5);
  const auto f = fn("1 - 2*x + 3*x^4 - x^5");
  const auto c = project(f, basis);
  for (int i = 0; i <= 20; ++i) EXPECT_NEAR(reconstruct(c, basis, i / 20.0), f(i / 20.0), 1e-13);
}

}  // namespace
}  // namespace opmivp
