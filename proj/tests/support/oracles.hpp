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

// Independent reference computations for the test suites. Nothing here calls
// into the library's numerics.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace opmivp::testing {

/// Composite Simpson on [a, b] with `panels` (even) subintervals.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
  if (panels < 2 || panels % 2 != 0) throw std::invalid_argument("simpson: panels must be even");
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

/// 2000-panel Simpson with one Richardson step against the 1000-panel rule
/// on the same points; removes the h^4 term.
inline double simpson_richardson(const std::function<double(double)>& f, double a = 0.0, double b = 1.0) {
  const double fine = simpson(f, a, b, 2000);
  const double coarse = simpson(f, a, b, 1000);
  return fine + (fine - coarse) / 15.0;
}

/// sqrt(2k+1) P_k(2x-1) via the three-term Legendre recurrence.
inline double shifted_legendre_orthonormal(int k, double x) {
  const double t = 2.0 * x - 1.0;
  double p0 = 1.0;
  double p1 = t;
  if (k == 0) return 1.0;
  for (int j = 1; j < k; ++j) {
    const double p2 = ((2.0 * j + 1.0) * t * p1 - j * p0) / (j + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return std::sqrt(2.0 * k + 1.0) * p1;
}

/// Bernoulli numbers from sum_{k=0}^{m} C(m+1, k) B_k = 0, B_0 = 1.
inline std::vector<boost::multiprecision::cpp_rational> bernoulli_by_recurrence(int n_max) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  std::vector<cpp_rational> b(static_cast<std::size_t>(n_max) + 1);
  b[0] = 1;
  for (int m = 1; m <= n_max; ++m) {
    cpp_rational s = 0;
    cpp_int binom = 1;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      s += cpp_rational(binom) * b[static_cast<std::size_t>(k)];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[static_cast<std::size_t>(m)] = -s / cpp_rational(m + 1);
  }
  return b;
}

/// Closed form of y'' + 5y' + 3y = exp(-x), y(0) = y'(0) = 0.
inline double example1_exact(double x) {
  const double s = std::sqrt(13.0);
  return std::exp(-2.5 * x) * (std::cosh(s / 2 * x) + 3.0 / s * std::sinh(s / 2 * x)) - std::exp(-x);
}

/// Classical fixed-step RK4 on y'' = r - P y' - Q y. Only for coarse cross
/// checks of the adaptive integrator.
inline double rk4_endpoint(const std::function<double(double)>& P, const std::function<double(double)>& Q,
                           const std::function<double(double)>& r, double alpha, double beta, double a,
                           double b, int steps) {
  const double h = (b - a) / steps;
  double y = alpha;
  double v = beta;
  auto acc = [&](double x, double yy, double vv) { return r(x) - P(x) * vv - Q(x) * yy; };
  for (int i = 0; i < steps; ++i) {
    const double x = a + i * h;
    const double k1y = v, k1v = acc(x, y, v);
    const double k2y = v + h / 2 * k1v, k2v = acc(x + h / 2, y + h / 2 * k1y, v + h / 2 * k1v);
    const double k3y = v + h / 2 * k2v, k3v = acc(x + h / 2, y + h / 2 * k2y, v + h / 2 * k2v);
    const double k4y = v + h * k3v, k4v = acc(x + h, y + h * k3y, v + h * k3v);
    y += h / 6 * (k1y + 2 * k2y + 2 * k3y + k4y);
    v += h / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
  }
  return y;
}

}  // namespace opmivp::testing
