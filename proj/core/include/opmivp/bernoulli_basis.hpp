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

#include "opmivp/rational_poly.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace opmivp {

inline constexpr int kDefaultMaxOrder = 12;

/// c * sqrt(radicand) with a squarefree radicand >= 1.
struct RadicalNumber {
  Rational coeff;
  BigInt radicand{1};

  double to_double() const;
  friend bool operator==(const RadicalNumber&, const RadicalNumber&) = default;
};

/// sqrt(radicand) * rational_part(x), radicand squarefree.
struct SqrtScaled {
  BigInt radicand{1};
  RationalPoly rational_part;

  /// Brings an arbitrary positive radicand to squarefree form, moving the
  /// square factor into the rational part (sqrt(12) p -> sqrt(3) 2p).
  static SqrtScaled normalized(const BigInt& radicand, RationalPoly rational_part);

  int degree() const noexcept { return rational_part.degree(); }
  /// Same function up to an overall factor of -1.
  bool equal_up_to_sign(const SqrtScaled& other) const;
  friend bool operator==(const SqrtScaled&, const SqrtScaled&) = default;

  /// "sqrt(R) * [c0, c1, ...]".
  std::string to_string() const;
};

/// Splits m > 0 as square_part^2 * squarefree_part.
struct SquarefreeSplit {
  BigInt square_part;
  BigInt squarefree_part;
};
SquarefreeSplit squarefree_split(const BigInt& m);

/// Exact L2[0,1] inner product of two radical-scaled polynomials.
RadicalNumber inner_product(const SqrtScaled& a, const SqrtScaled& b);

/// [B_0(0), ..., B_{n_max}(0)] with the B_1(0) = -1/2 convention.
std::vector<Rational> bernoulli_numbers(int n_max);

/// The monic Bernoulli polynomial B_n.
RationalPoly bernoulli_polynomial(int n);

struct BasisOptions {
  int max_order = kDefaultMaxOrder;
};

/// The orthonormal polynomials phi_0..phi_n on [0,1] obtained by
/// Gram-Schmidt on B_0..B_n. Immutable once built.
///
/// Exact members are kept symbolically. For floating point evaluation each
/// member is also cached in the centred variable t = 2x - 1, where the
/// coefficients are much smaller than in the raw power basis. Horner's rule
/// runs in long double, which absorbs the remaining cancellation near the
/// interval ends at the higher orders.
class OrthonormalBasis {
 public:
  explicit OrthonormalBasis(std::vector<SqrtScaled> members);

  int order() const noexcept { return static_cast<int>(members_.size()) - 1; }
  std::size_t size() const noexcept { return members_.size(); }
  const SqrtScaled& member(std::size_t k) const { return members_.at(k); }
  std::span<const SqrtScaled> members() const noexcept { return members_; }

  /// phi_k as double coefficients in powers of x.
  std::span<const double> power_coeffs(std::size_t k) const { return power_.at(k); }

  /// [phi_0(x), ..., phi_n(x)]. Points outside [0,1] are evaluated but warn.
  std::vector<double> eval(double x) const;
  /// Allocation-free variant, no domain warning. out.size() must be size().
  void eval_into(double x, std::span<double> out) const;
  /// sum_k c_k phi_k(x); c may be shorter than size().
  double eval_combination(std::span<const double> c, double x) const;

  /// The basis phi_0..phi_m, m <= order().
  OrthonormalBasis prefix(int m) const;

 private:
  long double eval_member(std::size_t k, long double t) const;

  std::vector<SqrtScaled> members_;
  std::vector<std::vector<long double>> centred_;
  std::vector<std::vector<double>> power_;
};

/// Runs exact Gram-Schmidt. Throws OrderTooLarge if n > options.max_order.
OrthonormalBasis gram_schmidt_basis(int n, const BasisOptions& options = {});

/// Free-function form of OrthonormalBasis::eval.
std::vector<double> eval_basis(const OrthonormalBasis& basis, double x);

}  // namespace opmivp
