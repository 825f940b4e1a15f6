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

#include "opmivp/bernoulli_basis.hpp"
#include "opmivp/integrable_function.hpp"

#include <span>
#include <vector>

namespace opmivp {

/// Expansion coefficients c_0..c_n against the order-n orthonormal basis.
/// The basis of a given order is unique, so the order identifies it.
struct CoeffVector {
  int basis_order = 0;
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t k) const { return values[k]; }
};

struct QuadratureOptions {
  int initial_nodes = 64;
  int max_nodes = 1024;
  /// Max-norm change between successive doublings that counts as converged.
  double tolerance = 1e-13;
};

/// c_k = <f, phi_k>. Exact (rational, rounded once) for constants and
/// polynomials; adaptive Gauss-Legendre for closures. Throws NumericalError
/// naming the sample point if f is not finite at a quadrature node.
CoeffVector project(const IntegrableFunction& f, const OrthonormalBasis& basis,
                    const QuadratureOptions& options = {});

/// Projection with one fixed m-point Gauss rule, no adaptivity.
CoeffVector project_fixed(const IntegrableFunction& f, const OrthonormalBasis& basis, int nodes);

/// Exact projection of a polynomial: c_k = <p, phi_k> as c * sqrt(R).
std::vector<RadicalNumber> project_exact(const RationalPoly& p, const OrthonormalBasis& basis);

/// sum_k c_k phi_k as an exact polynomial. Throws std::domain_error if the
/// radicals do not cancel (the combination is not a rational polynomial).
RationalPoly reconstruct_exact(std::span<const RadicalNumber> c, const OrthonormalBasis& basis);

/// C^T phi(x).
double reconstruct(const CoeffVector& c, const OrthonormalBasis& basis, double x);

/// Power-basis coefficients (ascending) of sum_k c_k phi_k.
std::vector<double> coeffs_to_power_basis(const CoeffVector& c, const OrthonormalBasis& basis);

}  // namespace opmivp
