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

#include "opmivp/ivp_solver.hpp"

#include "opmivp/error.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <limits>
#include <cmath>
#include <sstream>

namespace opmivp {
namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Coefficients of u((x - a)/h) in powers of x.
std::vector<double> unit_to_domain(std::span<const double> u, const DomainMap& map) {
  if (map.a == 0.0 && map.h == 1.0) return {u.begin(), u.end()};
  std::vector<long double> acc;
  const long double c0 = -static_cast<long double>(map.a) / map.h;
  const long double c1 = 1.0L / map.h;
  for (auto it = u.rbegin(); it != u.rend(); ++it) {
    // acc = acc * (c0 + c1 x) + u_k
    std::vector<long double> next(acc.size() + 1, 0.0L);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k] += acc[k] * c0;
      next[k + 1] += acc[k] * c1;
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return {acc.begin(), acc.end()};
}

std::vector<double> combine_power(const OrthonormalBasis& basis, std::span<const double> c) {
  return coeffs_to_power_basis(CoeffVector{basis.order(), {c.begin(), c.end()}}, basis);
}

void scale(std::vector<double>& v, double s) {
  for (auto& x : v) x *= s;
}

Eigen::VectorXd to_eigen(const CoeffVector& c) {
  return Eigen::Map<const Eigen::VectorXd>(c.values.data(), static_cast<Eigen::Index>(c.size()));
}

// Projection of r - P beta - Q (alpha + beta t) on the unit interval.
Eigen::VectorXd right_hand_side(const IVProblem& u, const OrthonormalBasis& basis,
                                const QuadratureOptions& q) {
  Eigen::VectorXd rhs = to_eigen(project(u.r, basis, q));
  if (u.beta != 0.0) rhs -= u.beta * to_eigen(project(u.P, basis, q));
  if (u.alpha != 0.0) rhs -= u.alpha * to_eigen(project(u.Q, basis, q));
  if (u.beta != 0.0) {
    const auto t = IntegrableFunction::polynomial(RationalPoly::monomial(1));
    rhs -= u.beta * to_eigen(project(u.Q * t, basis, q));
  }
  return rhs;
}

SpectralSolution solve_system(const IVProblem& original, const NormalizedProblem& norm,
                              const Eigen::MatrixXd& system, const Eigen::VectorXd& rhs,
                              std::shared_ptr<const OrthonormalBasis> ext, const SolveOptions& options) {
  const int n = original.n;
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(system.transpose());
  const double rcond = lu.rcond();
  const double cond = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  if (!(cond <= options.max_condition)) {
    std::ostringstream os;
    os << "linear system is singular or ill-conditioned (condition estimate " << cond
       << "); try a different truncation order than n = " << n;
    throw NumericalError(os.str());
  }
  const Eigen::VectorXd c = lu.solve(rhs);
  if (!c.allFinite()) throw NumericalError("linear solve produced non-finite coefficients");

  SpectralSolution sol;
  sol.c = CoeffVector{n, std::vector<double>(c.data(), c.data() + c.size())};
  sol.domain = original.domain;
  sol.condition_estimate = cond;
  sol.problem_echo = original.summary();
  sol.problem_hash = fnv1a(sol.problem_echo);

  // Exact antiderivatives: with the order-(n+2) matrix every row touched by
  // a degree <= n+1 integrand is exact.
  const Eigen::MatrixXd theta = build_theta(n + 2).entries;
  Eigen::VectorXd c_ext = Eigen::VectorXd::Zero(n + 3);
  c_ext.head(n + 1) = c;
  const double alpha = norm.problem.alpha;
  const double beta = norm.problem.beta;
  Eigen::VectorXd dy = theta.transpose() * c_ext;
  Eigen::VectorXd y = theta.transpose() * dy;
  dy(0) += beta;
  // alpha + beta t = (alpha + beta/2) phi_0 + beta/(2 sqrt 3) phi_1
  y(0) += alpha + 0.5 * beta;
  y(1) += beta / (2.0 * std::sqrt(3.0));
  sol.dy_unit.assign(dy.data(), dy.data() + dy.size());
  sol.y_unit.assign(y.data(), y.data() + y.size());

  const double h = norm.map.h;
  sol.y_poly = unit_to_domain(combine_power(*ext, sol.y_unit), norm.map);
  sol.dy_poly = unit_to_domain(combine_power(*ext, sol.dy_unit), norm.map);
  sol.ddy_poly = unit_to_domain(combine_power(*ext, sol.c.values), norm.map);
  scale(sol.dy_poly, 1.0 / h);
  scale(sol.ddy_poly, 1.0 / (h * h));
  sol.basis = std::move(ext);
  sol.residual_linf = residual_norm(sol, original, options.residual_grid);
  return sol;
}

std::shared_ptr<const OrthonormalBasis> extended_basis(int n, const SolveOptions& options) {
  if (n > options.max_order) {
    throw OrderTooLarge("order " + std::to_string(n) + " exceeds the configured maximum " +
                        std::to_string(options.max_order));
  }
  return std::make_shared<const OrthonormalBasis>(gram_schmidt_basis(n + 2, {.max_order = n + 2}));
}

}  // namespace

void IVProblem::validate() const {
  if (!(domain.a < domain.b) || !std::isfinite(domain.a) || !std::isfinite(domain.b))
    throw InputError("domain must satisfy a < b with finite endpoints");
  if (n < 1) throw InputError("truncation order n must be >= 1");
  if (!std::isfinite(alpha) || !std::isfinite(beta)) throw InputError("initial values must be finite");
}

std::string IVProblem::summary() const {
  std::ostringstream os;
  os.precision(17);
  os << "y'' + (" << P.describe() << ") y' + (" << Q.describe() << ") y = " << r.describe()
     << "; y(" << domain.a << ") = " << alpha << ", y'(" << domain.a << ") = " << beta << "; x in ["
     << domain.a << ", " << domain.b << "]; n = " << n;
  return os.str();
}

NormalizedProblem normalize_domain(const IVProblem& p) {
  p.validate();
  const double a = p.domain.a;
  const double h = p.domain.length();
  NormalizedProblem out{p, DomainMap{a, h}};
  if (a == 0.0 && h == 1.0) return out;
  auto& u = out.problem;
  u.P = h * p.P.affine_substituted(a, h);
  u.Q = (h * h) * p.Q.affine_substituted(a, h);
  u.r = (h * h) * p.r.affine_substituted(a, h);
  u.beta = h * p.beta;
  u.domain = {0.0, 1.0};
  return out;
}

double SpectralSolution::y(double x) const {
  return basis->eval_combination(y_unit, (x - domain.a) / domain.length());
}

double SpectralSolution::dy(double x) const {
  return basis->eval_combination(dy_unit, (x - domain.a) / domain.length()) / domain.length();
}

double SpectralSolution::ddy(double x) const {
  const double h = domain.length();
  return basis->eval_combination(c.values, (x - domain.a) / h) / (h * h);
}

SpectralSolution solve_constant(const IVProblem& p, const SolveOptions& options) {
  const auto pc = p.P.constant_value();
  const auto qc = p.Q.constant_value();
  if (!pc || !qc) throw InputError("solve_constant requires constant P and Q");
  const auto norm = normalize_domain(p);
  auto ext = extended_basis(p.n, options);
  const OrthonormalBasis basis = ext->prefix(p.n);
  const double pt = *norm.problem.P.constant_value();
  const double qt = *norm.problem.Q.constant_value();
  const Eigen::MatrixXd theta = build_theta(p.n).entries;
  const Eigen::MatrixXd system =
      Eigen::MatrixXd::Identity(p.n + 1, p.n + 1) + pt * theta + qt * (theta * theta);
  const Eigen::VectorXd rhs = right_hand_side(norm.problem, basis, options.quadrature);
  return solve_system(p, norm, system, rhs, std::move(ext), options);
}

SpectralSolution solve_variable(const IVProblem& p, const SolveOptions& options) {
  const auto norm = normalize_domain(p);
  auto ext = extended_basis(p.n, options);
  const OrthonormalBasis basis = ext->prefix(p.n);
  const Eigen::MatrixXd theta = build_theta(p.n).entries;
  const auto a = build_product_matrix(basis, norm.problem.P, options.product_mode, options.quadrature);
  const auto b = build_product_matrix(basis, norm.problem.Q, options.product_mode, options.quadrature);
  const Eigen::MatrixXd system =
      Eigen::MatrixXd::Identity(p.n + 1, p.n + 1) + theta * a.entries + theta * theta * b.entries;
  const Eigen::VectorXd rhs = right_hand_side(norm.problem, basis, options.quadrature);
  return solve_system(p, norm, system, rhs, std::move(ext), options);
}

SpectralSolution solve(const IVProblem& p, const SolveOptions& options) {
  if (p.P.is_constant() && p.Q.is_constant()) return solve_constant(p, options);
  return solve_variable(p, options);
}

std::vector<double> truncated_double_integral(const CoeffVector& c) {
  const Eigen::MatrixXd theta = build_theta(c.basis_order).entries;
  const Eigen::VectorXd v = (theta * theta).transpose() * to_eigen(c);
  return {v.data(), v.data() + v.size()};
}

double residual_norm(const SpectralSolution& sol, const IVProblem& p, int grid) {
  if (grid < 2) throw InputError("residual grid needs at least 2 points");
  double worst = 0.0;
  for (double x : uniform_grid(p.domain, grid)) {
    const double res = sol.ddy(x) + p.P(x) * sol.dy(x) + p.Q(x) * sol.y(x) - p.r(x);
    if (std::isnan(res)) return res;
    worst = std::max(worst, std::abs(res));
  }
  return worst;
}

SampleSet sample_solution(const SpectralSolution& sol, std::span<const double> grid) {
  SampleSet s;
  s.method = "spectral n=" + std::to_string(sol.order());
  s.x.assign(grid.begin(), grid.end());
  for (double x : grid) {
    s.y.push_back(sol.y(x));
    s.dy.push_back(sol.dy(x));
  }
  return s;
}

ErrorMetrics error_report(const SpectralSolution& sol, const SampleSet& ref) {
  if (!ref.x.empty() && (ref.x.front() < sol.domain.a - 1e-12 || ref.x.back() > sol.domain.b + 1e-12))
    throw DimensionMismatch("reference grid extends outside the solution domain");
  return compare(sample_solution(sol, ref.x), ref);
}

std::vector<StudyRow> convergence_study(const IVProblem& p, std::span<const int> n_list,
                                        const SampleSet* reference, const SolveOptions& options) {
  if (n_list.empty()) throw InputError("convergence study needs at least one order");
  if (!std::is_sorted(n_list.begin(), n_list.end()) ||
      std::adjacent_find(n_list.begin(), n_list.end()) != n_list.end())
    throw InputError("convergence study orders must be strictly ascending");
  std::vector<StudyRow> rows;
  for (int n : n_list) {
    IVProblem q = p;
    q.n = n;
    const auto sol = solve(q, options);
    StudyRow row{n, sol.residual_linf, std::nullopt};
    if (reference) row.err_linf = error_report(sol, *reference).linf;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace opmivp
