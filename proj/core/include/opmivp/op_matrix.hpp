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
#include "opmivp/projection.hpp"

#include <Eigen/Dense>

#include <vector>

namespace opmivp {

enum class OpMatrixKind { Integration, ProductLinearization };

/// Dense (n+1)x(n+1) operator on basis coefficients. Row i holds the basis
/// expansion of the image of phi_i: the integral from zero for the
/// integration matrix, phi_i times the coefficient function for products.
struct OpMatrix {
  int n = 0;
  OpMatrixKind kind = OpMatrixKind::Integration;
  Eigen::MatrixXd entries;

  double operator()(int i, int j) const { return entries(i, j); }
};

/// How the coefficient function enters a product matrix.
enum class ProductMode {
  /// Project f onto the basis first, then integrate phi_i f^ phi_j exactly.
  Paper,
  /// Integrate phi_i f phi_j by adaptive quadrature, no pre-truncation.
  Direct,
};

/// Integration matrix: (0,0) = 1/2, (i,i+1) = 1/(2 sqrt((2i+1)(2i+3))),
/// (i+1,i) = -(i,i+1), zero elsewhere.
OpMatrix build_theta(int n);

/// Exact value of the integration matrix entry (i, j) as c * sqrt(R).
RadicalNumber theta_entry_exact(int i, int j);

struct ThetaCheck {
  /// Largest defect over rows 0..n-1; exactly 0 when the closed form is right.
  double max_defect = 0.0;
  /// Max-abs power coefficient of int_0^x phi_i - sum_j Theta_ij phi_j, per
  /// row 0..n. The last row carries the truncated phi_{n+1} tail.
  std::vector<double> row_defects;
  /// Largest |theta(i,j) - exact(i,j)| over all entries of the given matrix.
  double max_entry_error = 0.0;
};

/// Checks the integration identity in exact radical arithmetic. Throws
/// DimensionMismatch when theta and basis have different orders.
ThetaCheck verify_theta_identity(const OrthonormalBasis& basis, const OpMatrix& theta);

/// M_ij = <phi_i f~, phi_j> with f~ chosen by mode. Throws NumericalError if
/// f has a non-finite sample.
OpMatrix build_product_matrix(const OrthonormalBasis& basis, const IntegrableFunction& f,
                              ProductMode mode = ProductMode::Paper,
                              const QuadratureOptions& options = {});

}  // namespace opmivp
