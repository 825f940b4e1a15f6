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

#include "opmivp/op_matrix.hpp"

#include "opmivp/diagnostics.hpp"
#include "opmivp/error.hpp"
#include "opmivp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace opmivp {
namespace {

// Sum of sqrt(R) * poly_R terms, grouped by squarefree radicand.
class RadicalPolySum {
 public:
  void add(const RadicalNumber& scale, const SqrtScaled& f) {
    if (scale.coeff == 0 || f.rational_part.is_zero()) return;
    const auto split = squarefree_split(scale.radicand * f.radicand);
    groups_[split.squarefree_part] += f.rational_part * (scale.coeff * Rational(split.square_part));
  }

  /// Max-abs coefficient in double; exactly 0 when every group cancels.
  double max_abs_coeff() const {
    std::vector<double> total;
    for (const auto& [radicand, poly] : groups_) {
      if (poly.is_zero()) continue;
      const double s = std::sqrt(radicand.convert_to<double>());
      const auto c = poly.coeffs();
      if (total.size() < c.size()) total.resize(c.size(), 0.0);
      for (std::size_t k = 0; k < c.size(); ++k) total[k] += s * to_double(c[k]);
    }
    double m = 0.0;
    for (double v : total) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  std::map<BigInt, RationalPoly> groups_;
};

void require_finite(double v, double x, const IntegrableFunction& f) {
  if (std::isfinite(v)) return;
  std::ostringstream os;
  os.precision(17);
  os << "non-finite sample f(" << x << ") = " << v << " of " << f.describe();
  throw NumericalError(os.str());
}

// M_ij = sum_q w_q phi_i(x_q) g(x_q) phi_j(x_q).
template <class G>
Eigen::MatrixXd weighted_gram(const OrthonormalBasis& basis, const GaussRule& rule, G&& g) {
  const auto size = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size, size);
  Eigen::VectorXd phi(size);
  for (std::size_t q = 0; q < rule.size(); ++q) {
    basis.eval_into(rule.nodes[q], {phi.data(), basis.size()});
    m.noalias() += (rule.weights[q] * g(rule.nodes[q])) * (phi * phi.transpose());
  }
  return m;
}

}  // namespace

OpMatrix build_theta(int n) {
  if (n < 0) throw std::invalid_argument("build_theta: n must be >= 0");
  OpMatrix theta{n, OpMatrixKind::Integration, Eigen::MatrixXd::Zero(n + 1, n + 1)};
  theta.entries(0, 0) = 0.5;
  for (int i = 0; i < n; ++i) {
    const double v = 1.0 / (2.0 * std::sqrt(static_cast<double>((2 * i + 1) * (2 * i + 3))));
    theta.entries(i, i + 1) = v;
    theta.entries(i + 1, i) = -v;
  }
  return theta;
}

RadicalNumber theta_entry_exact(int i, int j) {
  if (i == 0 && j == 0) return {Rational(1, 2), BigInt(1)};
  int lo = -1;
  int sign = 1;
  if (j == i + 1) {
    lo = i;
  } else if (i == j + 1) {
    lo = j;
    sign = -1;
  } else {
    return {Rational(0), BigInt(1)};
  }
  // 1 / (2 sqrt(m)) = s sqrt(f) / (2 m) with m = s^2 f.
  const BigInt m = BigInt(2 * lo + 1) * (2 * lo + 3);
  const auto split = squarefree_split(m);
  return {Rational(sign * split.square_part, 2 * m), split.squarefree_part};
}

ThetaCheck verify_theta_identity(const OrthonormalBasis& basis, const OpMatrix& theta) {
  if (theta.n != basis.order() || theta.entries.rows() != theta.n + 1 ||
      theta.entries.cols() != theta.n + 1) {
    throw DimensionMismatch("theta of order " + std::to_string(theta.n) + " vs basis of order " +
                            std::to_string(basis.order()));
  }
  const int n = theta.n;
  ThetaCheck check;
  for (int i = 0; i <= n; ++i) {
    const auto& phi_i = basis.member(i);
    RadicalPolySum defect;
    defect.add({Rational(1), BigInt(1)}, SqrtScaled{phi_i.radicand, integrate_from_zero(phi_i.rational_part)});
    for (int j = std::max(0, i - 1); j <= std::min(n, i + 1); ++j) {
      RadicalNumber e = theta_entry_exact(i, j);
      e.coeff = -e.coeff;
      defect.add(e, basis.member(j));
    }
    check.row_defects.push_back(defect.max_abs_coeff());
    if (i < n) check.max_defect = std::max(check.max_defect, check.row_defects.back());
  }
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      check.max_entry_error =
          std::max(check.max_entry_error, std::abs(theta(i, j) - theta_entry_exact(i, j).to_double()));
  return check;
}

OpMatrix build_product_matrix(const OrthonormalBasis& basis, const IntegrableFunction& f,
                              ProductMode mode, const QuadratureOptions& options) {
  const int n = basis.order();
  OpMatrix out{n, OpMatrixKind::ProductLinearization, {}};
  if (auto c = f.constant_value()) {
    require_finite(*c, 0.0, f);
    out.entries = *c * Eigen::MatrixXd::Identity(n + 1, n + 1);
    return out;
  }
  // A polynomial of degree <= n is its own projection, so both modes agree.
  const auto poly = f.as_polynomial();
  if (mode == ProductMode::Paper || (poly && poly->degree() <= n)) {
    const CoeffVector a = project(f, basis, options);
    // phi_i f^ phi_j has degree <= 3n; this rule integrates it exactly.
    const auto rule = gauss_legendre_01((3 * n + 2) / 2 + 1);
    out.entries = weighted_gram(basis, *rule, [&](double x) { return basis.eval_combination(a.values, x); });
    return out;
  }
  int nodes = options.initial_nodes;
  auto sample = [&](double x) {
    const double v = f(x);
    require_finite(v, x, f);
    return v;
  };
  Eigen::MatrixXd prev = weighted_gram(basis, *gauss_legendre_01(nodes), sample);
  while (nodes < options.max_nodes) {
    nodes = std::min(2 * nodes, options.max_nodes);
    Eigen::MatrixXd next = weighted_gram(basis, *gauss_legendre_01(nodes), sample);
    const double change = (next - prev).cwiseAbs().maxCoeff();
    prev = std::move(next);
    if (change < options.tolerance) {
      out.entries = std::move(prev);
      return out;
    }
  }
  warn("product matrix quadrature for " + f.describe() + " hit the node cap");
  out.entries = std::move(prev);
  return out;
}

}  // namespace opmivp
