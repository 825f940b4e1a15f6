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

#include "opmivp/expr.hpp"
#include "opmivp/integrable_function.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace opmivp {
namespace {

TEST(IntegrableFunction, FromExprPicksExactForms) {
  const auto c = IntegrableFunction::from_expr(parse("2*3 - 1"));
  ASSERT_TRUE(c.is_constant());
  EXPECT_EQ(*c.constant_value(), 5.0);

  const auto p = IntegrableFunction::from_expr(parse("1 + x"));
  EXPECT_FALSE(p.is_constant());
  EXPECT_EQ(*p.as_polynomial(), (RationalPoly{1, 1}));

  const auto f = IntegrableFunction::from_expr(parse("tan(x)"));
  EXPECT_FALSE(f.as_polynomial().has_value());
  EXPECT_DOUBLE_EQ(f(0.5), std::tan(0.5));
  EXPECT_EQ(f.describe(), "tan(x)");
}

TEST(IntegrableFunction, DegreeZeroPolynomialCollapsesToConstant) {
  EXPECT_TRUE(IntegrableFunction::polynomial(RationalPoly{3}).is_constant());
  EXPECT_TRUE(IntegrableFunction::from_expr(parse("x - x + 2")).is_constant());
}

TEST(IntegrableFunction, ArithmeticStaysExactWhenPossible) {
  const auto p = IntegrableFunction::polynomial(RationalPoly{0, 1});
  const auto q = IntegrableFunction::constant(2.0);
  EXPECT_EQ(*(p * p + q).as_polynomial(), (RationalPoly{2, 0, 1}));
  EXPECT_EQ(*(3.0 * p).as_polynomial(), (RationalPoly{0, 3}));

  const auto e = IntegrableFunction::from_expr(parse("exp(x)"));
  const auto mixed = e * p + q;
  EXPECT_FALSE(mixed.as_polynomial().has_value());
  EXPECT_DOUBLE_EQ(mixed(0.5), std::exp(0.5) * 0.5 + 2.0);
}

TEST(IntegrableFunction, AffineSubstitution) {
  const auto p = IntegrableFunction::polynomial(RationalPoly{0, 0, 1});
  const auto s = p.affine_substituted(1.0, 2.0);
  EXPECT_EQ(*s.as_polynomial(), (RationalPoly{1, 4, 4}));
  const auto f = IntegrableFunction::from_expr(parse("sin(x)")).affine_substituted(0.25, 0.5);
  EXPECT_DOUBLE_EQ(f(0.5), std::sin(0.5));
  EXPECT_EQ(*IntegrableFunction::constant(4.0).affine_substituted(3.0, 7.0).constant_value(), 4.0);
}

}  // namespace
}  // namespace opmivp
