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

#include "opmivp/oracle.hpp"

#include "opmivp/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace opmivp {
namespace {

using State = std::array<double, 2>;

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - b* (fifth minus fourth order weights).
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;
// Weights of the fourth-order continuous extension at the step midpoint.
constexpr double m1 = 6025192743.0 / 60171106304, m3 = 51252292925.0 / 130801643196,
                 m4 = -2691868925.0 / 90256659456, m5 = 187940372067.0 / 3189068634112,
                 m6 = -1776094331.0 / 39487288512, m7 = 11237099.0 / 470086768;

struct Rhs {
  const IVProblem& p;

  State operator()(double x, const State& u) const {
    const State d{u[1], p.r(x) - p.P(x) * u[1] - p.Q(x) * u[0]};
    if (!std::isfinite(d[1])) {
      std::ostringstream os;
      os.precision(17);
      os << "right-hand side is not finite at x = " << x;
      throw NumericalError(os.str());
    }
    return d;
  }
};

State axpy(const State& u, double h, std::initializer_list<std::pair<double, const State*>> terms) {
  State out = u;
  for (const auto& [w, k] : terms) {
    out[0] += h * w * (*k)[0];
    out[1] += h * w * (*k)[1];
  }
  return out;
}

double hermite(double t, double h, double y0, double d0, double y1, double d1) {
  const double t2 = t * t;
  const double t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * h * d0 + (-2 * t3 + 3 * t2) * y1 +
         (t3 - t2) * h * d1;
}

}  // namespace

OracleSolution rk_solve(const IVProblem& p, double tol, int grid) {
  if (!(tol >= 1e-13 && tol <= 1e-3)) throw InputError("oracle tolerance must lie in [1e-13, 1e-3]");
  if (grid < 2) throw InputError("oracle grid needs at least 2 points");
  p.validate();

  const Rhs f{p};
  const auto xs = uniform_grid(p.domain, grid);
  const double span = p.domain.length();
  const double h_max = span / 16.0;
  const double h_min = 1e-14 * std::max(1.0, std::abs(p.domain.b));

  OracleSolution out;
  out.method = "dopri5";
  out.tolerance = tol;
  out.x = xs;
  out.y.reserve(xs.size());
  out.dy.reserve(xs.size());

  double x = p.domain.a;
  State u{p.alpha, p.beta};
  State k1 = f(x, u);
  double h = std::min(h_max, 1e-3 * span);
  std::size_t next = 0;
  auto emit_until = [&](double x_end, const State& u0, const State& d0, const State& u1, const State& d1,
                        double step) {
    while (next < xs.size() && xs[next] <= x_end) {
      const double t = step > 0 ? (xs[next] - (x_end - step)) / step : 1.0;
      out.y.push_back(hermite(t, step, u0[0], d0[0], u1[0], d1[0]));
      out.dy.push_back(hermite(t, step, u0[1], d0[1], u1[1], d1[1]));
      ++next;
    }
  };
  emit_until(x, u, k1, u, k1, 0.0);

  while (next < xs.size()) {
    const bool last = x + h >= p.domain.b;
    if (last) h = p.domain.b - x;
    const State k2 = f(x + c2 * h, axpy(u, h, {{a21, &k1}}));
    const State k3 = f(x + c3 * h, axpy(u, h, {{a31, &k1}, {a32, &k2}}));
    const State k4 = f(x + c4 * h, axpy(u, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const State k5 = f(x + c5 * h, axpy(u, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const State k6 = f(x + h, axpy(u, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const State u_new = axpy(u, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const State k7 = f(x + h, u_new);

    // The step error and the error of the cubic Hermite interpolant at the
    // midpoint, measured against the continuous extension, are both held to tol.
    const State mid = axpy(u, h, {{m1, &k1}, {m3, &k3}, {m4, &k4}, {m5, &k5}, {m6, &k6}, {m7, &k7}});
    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double e_mid = hermite(0.5, h, u[i], k1[i], u_new[i], k7[i]) - mid[i];
      const double scale = tol * (1.0 + std::max(std::abs(u[i]), std::abs(u_new[i])));
      err = std::max(err, std::max(std::abs(e), std::abs(e_mid)) / scale);
    }

    if (err <= 1.0) {
      const double x_new = last ? p.domain.b : x + h;
      emit_until(x_new, u, k1, u_new, k7, h);
      x = x_new;
      u = u_new;
      k1 = k7;
    }
    const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    h = std::min(h * factor, h_max);
    if (next < xs.size() && h < h_min) {
      std::ostringstream os;
      os.precision(17);
      os << "step size underflow at x = " << x << " (problem is stiff or singular there)";
      throw NumericalError(os.str());
    }
  }
  return out;
}

SampleSet eval_exact(const Expr& e, std::span<const double> grid) {
  SampleSet s;
  s.method = "exact: " + to_string(e);
  s.x.assign(grid.begin(), grid.end());
  s.y.reserve(grid.size());
  for (double x : grid) {
    const double v = eval_expr(e, x);
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os.precision(17);
      os << "exact solution is not finite at x = " << x;
      throw NumericalError(os.str());
    }
    s.y.push_back(v);
  }
  return s;
}

std::vector<double> uniform_grid(Interval domain, int points) {
  if (points < 2) throw InputError("grid needs at least 2 points");
  std::vector<double> xs(points);
  const double step = domain.length() / (points - 1);
  for (int i = 0; i < points; ++i) xs[i] = domain.a + step * i;
  xs.back() = domain.b;
  return xs;
}

ErrorMetrics compare(const SampleSet& a, const SampleSet& b) {
  if (a.x.size() != b.x.size() || a.y.size() != a.x.size() || b.y.size() != b.x.size())
    throw DimensionMismatch("sample sets have different sizes");
  for (std::size_t i = 0; i < a.x.size(); ++i) {
    if (std::abs(a.x[i] - b.x[i]) > 1e-12 * std::max(1.0, std::abs(a.x[i])))
      throw DimensionMismatch("sample sets are on different grids");
  }
  ErrorMetrics m;
  m.pointwise.reserve(a.x.size());
  for (std::size_t i = 0; i < a.x.size(); ++i) {
    const double e = std::abs(a.y[i] - b.y[i]);
    m.pointwise.push_back(e);
    m.linf = std::max(m.linf, e);
  }
  double sum = 0.0;
  for (std::size_t i = 1; i < a.x.size(); ++i) {
    const double e0 = m.pointwise[i - 1];
    const double e1v = m.pointwise[i];
    sum += 0.5 * (e0 * e0 + e1v * e1v) * (a.x[i] - a.x[i - 1]);
  }
  m.l2 = std::sqrt(sum);
  return m;
}

}  // namespace opmivp
