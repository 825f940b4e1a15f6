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

#include "opmivp/projection.hpp"

#include "opmivp/diagnostics.hpp"
#include "opmivp/error.hpp"
#include "opmivp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace opmivp {
namespace {

void check_order(const CoeffVector& c, const OrthonormalBasis& basis) {
  if (c.size() > basis.size()) throw DimensionMismatch("coefficient vector longer than the basis");
}

}  // namespace

CoeffVector project_fixed(const IntegrableFunction& f, const OrthonormalBasis& basis, int nodes) {
  const auto rule = gauss_legendre_01(nodes);
  CoeffVector c{basis.order(), std::vector<double>(basis.size(), 0.0)};
  std::vector<double> phi(basis.size());
  for (std::size_t q = 0; q < rule->size(); ++q) {
    const double x = rule->nodes[q];
    const double fx = f(x);
    if (!std::isfinite(fx)) {
      std::ostringstream os;
      os.precision(17);
      os << "non-finite sample f(" << x << ") = " << fx << " of " << f.describe();
      throw NumericalError(os.str());
    }
    basis.eval_into(x, phi);
    const double wf = rule->weights[q] * fx;
    for (std::size_t k = 0; k < phi.size(); ++k) c.values[k] += wf * phi[k];
  }
  return c;
}

std::vector<RadicalNumber> project_exact(const RationalPoly& p, const OrthonormalBasis& basis) {
  std::vector<RadicalNumber> out;
  out.reserve(basis.size());
  for (const auto& phi : basis.members()) {
    const Rational ip = inner_product(p, phi.rational_part);
    out.push_back(ip == 0 ? RadicalNumber{Rational(0), BigInt(1)} : RadicalNumber{ip, phi.radicand});
  }
  return out;
}

CoeffVector project(const IntegrableFunction& f, const OrthonormalBasis& basis,
                    const QuadratureOptions& options) {
  if (auto v = f.constant_value()) {
    CoeffVector c{basis.order(), std::vector<double>(basis.size(), 0.0)};
    c.values[0] = *v;
    return c;
  }
  if (auto p = f.as_polynomial()) {
    CoeffVector c{basis.order(), {}};
    for (const auto& r : project_exact(*p, basis)) c.values.push_back(r.to_double());
    return c;
  }
  int nodes = options.initial_nodes;
  CoeffVector prev = project_fixed(f, basis, nodes);
  while (nodes < options.max_nodes) {
    nodes = std::min(2 * nodes, options.max_nodes);
    CoeffVector next = project_fixed(f, basis, nodes);
    double change = 0.0;
    for (std::size_t k = 0; k < next.size(); ++k)
      change = std::max(change, std::abs(next.values[k] - prev.values[k]));
    prev = std::move(next);
    if (change < options.tolerance) return prev;
  }
  std::ostringstream os;
  os << "projection of " << f.describe() << " did not settle to " << options.tolerance << " with "
     << options.max_nodes << " Gauss nodes";
  warn(os.str());
  return prev;
}

RationalPoly reconstruct_exact(std::span<const RadicalNumber> c, const OrthonormalBasis& basis) {
  if (c.size() > basis.size()) throw DimensionMismatch("coefficient vector longer than the basis");
  RationalPoly sum;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].coeff == 0) continue;
    const auto& phi = basis.member(k);
    // c sqrt(R) * sqrt(r) p is rational only when R r is a perfect square.
    const auto split = squarefree_split(c[k].radicand * phi.radicand);
    if (split.squarefree_part != 1) throw std::domain_error("radicals do not cancel in reconstruction");
    sum += phi.rational_part * (c[k].coeff * Rational(split.square_part));
  }
  return sum;
}

double reconstruct(const CoeffVector& c, const OrthonormalBasis& basis, double x) {
  check_order(c, basis);
  return basis.eval_combination(c.values, x);
}

std::vector<double> coeffs_to_power_basis(const CoeffVector& c, const OrthonormalBasis& basis) {
  check_order(c, basis);
  std::vector<double> out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c.values[k] == 0.0) continue;
    const auto pk = basis.power_coeffs(k);
    if (out.size() < pk.size()) out.resize(pk.size(), 0.0);
    for (std::size_t j = 0; j < pk.size(); ++j) out[j] += c.values[k] * pk[j];
  }
  while (!out.empty() && out.back() == 0.0) out.pop_back();
  return out;
}

}  // namespace opmivp
