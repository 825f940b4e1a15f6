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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace opmivp {

using BigInt = boost::multiprecision::cpp_int;
/// Always stored in lowest terms with a positive denominator; zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

/// Exact univariate polynomial over the rationals, dense ascending powers.
///
/// The coefficient list never has a trailing zero; the zero polynomial has
/// an empty list. Equality is therefore plain coefficient-list equality.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  RationalPoly(std::initializer_list<Rational> coeffs);

  static RationalPoly constant(const Rational& c);
  /// The monomial c * x^k.
  static RationalPoly monomial(std::size_t k, const Rational& c = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree of a nonzero polynomial; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^k, zero past the end.
  Rational coeff(std::size_t k) const;
  const Rational& leading() const;

  RationalPoly operator-() const;
  RationalPoly& operator+=(const RationalPoly& rhs);
  RationalPoly& operator-=(const RationalPoly& rhs);
  RationalPoly& operator*=(const RationalPoly& rhs);
  RationalPoly& operator*=(const Rational& s);

  friend RationalPoly operator+(RationalPoly lhs, const RationalPoly& rhs) { return lhs += rhs; }
  friend RationalPoly operator-(RationalPoly lhs, const RationalPoly& rhs) { return lhs -= rhs; }
  friend RationalPoly operator*(RationalPoly lhs, const RationalPoly& rhs) { return lhs *= rhs; }
  friend RationalPoly operator*(RationalPoly p, const Rational& s) { return p *= s; }
  friend RationalPoly operator*(const Rational& s, RationalPoly p) { return p *= s; }

  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

  /// Exact value at a rational point.
  Rational operator()(const Rational& x) const;

  std::string to_string() const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

RationalPoly add(const RationalPoly& p, const RationalPoly& q);
RationalPoly mul(const RationalPoly& p, const RationalPoly& q);

/// Antiderivative vanishing at zero: result(x) = integral of p over [0, x].
RationalPoly integrate_from_zero(const RationalPoly& p);

RationalPoly derivative(const RationalPoly& p);

/// Exact integral of p over [0, 1].
Rational definite_integral_01(const RationalPoly& p);

/// Exact L2[0,1] inner product.
Rational inner_product(const RationalPoly& p, const RationalPoly& q);

/// p(a + h*x), computed exactly.
RationalPoly compose_affine(const RationalPoly& p, const Rational& a, const Rational& h);

/// Horner evaluation in double precision.
double eval(const RationalPoly& p, double x);

/// Coefficients rounded to double, ascending powers.
std::vector<double> to_doubles(const RationalPoly& p);

double to_double(const Rational& r);

std::ostream& operator<<(std::ostream& os, const RationalPoly& p);

}  // namespace opmivp
