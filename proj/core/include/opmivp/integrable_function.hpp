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

#pragma once

#include "opmivp/expr.hpp"
#include "opmivp/rational_poly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <variant>

namespace opmivp {

/// A coefficient or forcing function on the solution interval.
///
/// Constants and polynomials are kept exactly so that projections and
/// product matrices built from them are exact; everything else is an opaque
/// closure sampled by quadrature.
class IntegrableFunction {
 public:
  struct Constant {
    double value;
  };
  struct Polynomial {
    RationalPoly poly;
  };
  struct Closure {
    std::function<double(double)> fn;
    std::string label;
  };

  IntegrableFunction() : repr_(Constant{0.0}) {}
  static IntegrableFunction constant(double value);
  static IntegrableFunction polynomial(RationalPoly p);
  static IntegrableFunction closure(std::function<double(double)> fn, std::string label);
  /// Picks the most exact representation the expression admits.
  static IntegrableFunction from_expr(const Expr& e);

  double operator()(double x) const;

  bool is_constant() const noexcept { return std::holds_alternative<Constant>(repr_); }
  std::optional<double> constant_value() const;
  /// Exact polynomial form for Constant and Polynomial; nullopt for closures.
  std::optional<RationalPoly> as_polynomial() const;
  const auto& repr() const noexcept { return repr_; }

  std::string describe() const;

  /// t -> f(a + h t).
  IntegrableFunction affine_substituted(double a, double h) const;

  friend IntegrableFunction operator+(const IntegrableFunction& f, const IntegrableFunction& g);
  friend IntegrableFunction operator*(const IntegrableFunction& f, const IntegrableFunction& g);
  friend IntegrableFunction operator*(double s, const IntegrableFunction& f);

 private:
  explicit IntegrableFunction(std::variant<Constant, Polynomial, Closure> r) : repr_(std::move(r)) {}

  std::variant<Constant, Polynomial, Closure> repr_;
};

}  // namespace opmivp
