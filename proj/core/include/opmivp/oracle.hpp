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
#include "opmivp/ivp_solver.hpp"
#include "opmivp/samples.hpp"

#include <span>

namespace opmivp {

using OracleSolution = SampleSet;

inline constexpr double kDefaultOracleTolerance = 1e-10;

/// Reference solution by adaptive Dormand-Prince 5(4) on the first-order
/// system (y, y'). Values at the `grid` equally spaced points come from
/// cubic Hermite interpolation between accepted steps. Per component, both
/// the local step error and the interpolant's midpoint error are held below
/// tol * (1 + |u|); the step size does not depend on the output grid.
///
/// Throws InputError for tol outside [1e-13, 1e-3] or grid < 2, and
/// NumericalError on step-size underflow or a non-finite right-hand side.
OracleSolution rk_solve(const IVProblem& p, double tol = kDefaultOracleTolerance, int grid = 201);

/// Samples a closed-form solution. Throws NumericalError at the first
/// non-finite value.
SampleSet eval_exact(const Expr& e, std::span<const double> grid);

}  // namespace opmivp
