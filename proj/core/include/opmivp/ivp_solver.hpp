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
#include "opmivp/op_matrix.hpp"
#include "opmivp/projection.hpp"
#include "opmivp/samples.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace opmivp {

/// y'' + P(x) y' + Q(x) y = r(x) on [a, b], y(a) = alpha, y'(a) = beta.
struct IVProblem {
  IntegrableFunction P;
  IntegrableFunction Q;
  IntegrableFunction r;
  double alpha = 0.0;
  double beta = 0.0;
  Interval domain{};
  int n = 6;

  /// Throws InputError unless a < b, n >= 1 and alpha, beta are finite.
  void validate() const;
  /// One-line description used for provenance.
  std::string summary() const;
};

/// x = a + h t.
struct DomainMap {
  double a = 0.0;
  double h = 1.0;

  double to_unit(double x) const noexcept { return (x - a) / h; }
  double from_unit(double t) const noexcept { return a + h * t; }
};

struct NormalizedProblem {
  IVProblem problem;
  DomainMap map;
};

/// Rewrites the problem in t = (x - a)/h on [0,1]: P~ = h P, Q~ = h^2 Q,
/// r~ = h^2 r, beta~ = h beta.
NormalizedProblem normalize_domain(const IVProblem& p);

struct SolveOptions {
  ProductMode product_mode = ProductMode::Paper;
  int max_order = kDefaultMaxOrder;
  /// Solves whose 1-norm condition estimate exceeds this are rejected.
  double max_condition = 1e14;
  /// Points used for the residual stored on the solution.
  int residual_grid = 201;
  QuadratureOptions quadrature{};
};

/// Spectral approximation of an IVP.
///
/// `c` expands y'' on [0,1] in the order-n basis. y' and y are its exact
/// antiderivatives plus the initial data, expanded in the order-(n+2) basis
/// (`dy_unit`, `y_unit`). All evaluation methods and the power-basis
/// polynomials are in the original x domain.
struct SpectralSolution {
  CoeffVector c;
  std::vector<double> y_unit;
  std::vector<double> dy_unit;
  std::vector<double> y_poly;
  std::vector<double> dy_poly;
  std::vector<double> ddy_poly;
  Interval domain{};
  double condition_estimate = 0.0;
  double residual_linf = 0.0;
  std::string problem_echo;
  std::uint64_t problem_hash = 0;
  std::shared_ptr<const OrthonormalBasis> basis;  // order n + 2

  int order() const noexcept { return c.basis_order; }
  double y(double x) const;
  double dy(double x) const;
  double ddy(double x) const;
};

/// Case of constant P = p and Q = q: (I + p Theta + q Theta^2)^T C = R.
/// Throws InputError if P or Q is not constant, NumericalError if singular.
SpectralSolution solve_constant(const IVProblem& p, const SolveOptions& options = {});

/// General case with product matrices A, B for P and Q:
/// (I + Theta A + Theta^2 B)^T C = R.
SpectralSolution solve_variable(const IVProblem& p, const SolveOptions& options = {});

/// Dispatches to solve_constant when both coefficients are constant.
SpectralSolution solve(const IVProblem& p, const SolveOptions& options = {});

/// Basis coefficients of C^T Theta^2 phi using the order-n matrix only. The
/// last row of Theta drops the phi_{n+1} term, so this differs from the
/// exact double antiderivative unless c_{n-1} = c_n = 0.
std::vector<double> truncated_double_integral(const CoeffVector& c);

/// max over `grid` equally spaced points of |y'' + P y' + Q y - r|.
double residual_norm(const SpectralSolution& sol, const IVProblem& p, int grid = 201);

/// Samples of the spectral solution on the given abscissae.
SampleSet sample_solution(const SpectralSolution& sol, std::span<const double> grid);

/// |y_spectral - y_ref| on the reference grid.
ErrorMetrics error_report(const SpectralSolution& sol, const SampleSet& ref);

struct StudyRow {
  int n = 0;
  double residual_linf = 0.0;
  std::optional<double> err_linf;
};

/// Solves for each n (ascending, nonempty). The error column is filled when
/// a reference is supplied.
std::vector<StudyRow> convergence_study(const IVProblem& p, std::span<const int> n_list,
                                        const SampleSet* reference = nullptr,
                                        const SolveOptions& options = {});

}  // namespace opmivp
