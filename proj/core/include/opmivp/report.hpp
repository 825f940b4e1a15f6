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

#include "opmivp/ivp_solver.hpp"
#include "opmivp/samples.hpp"

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace opmivp {

inline constexpr int kDisplayDecimals = 5;

/// Fixed-point rendering; negative zero prints without the sign.
std::string format_fixed(double v, int decimals = kDisplayDecimals);
/// Shortest text that reads back to the same double.
std::string format_full(double v);

/// "(c0, c1, ...)" with fixed decimals.
std::string display_vector(std::span<const double> v, int decimals = kDisplayDecimals);

/// "-0.00009 x + 0.25057 x^2 - ..."; terms that round to zero are dropped.
std::string display_polynomial(std::span<const double> power, int decimals = kDisplayDecimals,
                               std::string_view var = "x");

/// Tabulated solution data behind a comparison plot.
///
/// Columns: x, y_approx, then y_oracle and y_exact when available,
/// abs_error (against the exact solution if given, else the oracle), and
/// the pointwise ODE residual.
struct PlotData {
  std::vector<double> x;
  std::vector<double> y_approx;
  std::vector<double> y_oracle;
  std::vector<double> y_exact;
  std::vector<double> abs_error;
  std::vector<double> residual;
};

/// Uses the grid of `oracle` or `exact` (which must agree), else `grid`
/// equally spaced points.
PlotData make_plot_data(const SpectralSolution& sol, const IVProblem& problem,
                        const SampleSet* oracle, const SampleSet* exact, int grid = 201);

void write_plot_csv(std::ostream& os, const PlotData& data);

/// Writes the CSV to `path`. Throws Error naming the path on I/O failure.
void emit_plot_data(const PlotData& data, const std::filesystem::path& path);

}  // namespace opmivp
