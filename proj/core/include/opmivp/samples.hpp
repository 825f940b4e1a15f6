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

#include <span>
#include <string>
#include <vector>

namespace opmivp {

struct Interval {
  double a = 0.0;
  double b = 1.0;

  double length() const noexcept { return b - a; }
};

/// `points` equally spaced abscissae covering [a, b] including both ends.
std::vector<double> uniform_grid(Interval domain, int points);

/// Pointwise samples of a solution. `dy` may be empty when unavailable.
struct SampleSet {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> dy;
  std::string method;
  double tolerance = 0.0;
};

struct ErrorMetrics {
  double linf = 0.0;
  /// Trapezoidal L2 norm of the pointwise error over the grid.
  double l2 = 0.0;
  std::vector<double> pointwise;
};

/// |a.y - b.y| on a shared grid. Throws DimensionMismatch if the grids differ.
ErrorMetrics compare(const SampleSet& a, const SampleSet& b);

}  // namespace opmivp
