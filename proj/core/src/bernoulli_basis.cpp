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

#include "opmivp/bernoulli_basis.hpp"

#include "opmivp/diagnostics.hpp"
#include "opmivp/error.hpp"

#include <boost/integer/common_factor.hpp>

#include <cmath>
#include <sstream>
#include <utility>

namespace opmivp {
namespace {

BigInt binomial(unsigned n, unsigned k) {
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double sqrt_of(const BigInt& r) { return std::sqrt(r.convert_to<double>()); }

}  // namespace

double RadicalNumber::to_double() const { return opmivp::to_double(coeff) * sqrt_of(radicand); }

SquarefreeSplit squarefree_split(const BigInt& m) {
  if (m <= 0) throw std::invalid_argument("squarefree_split: argument must be positive");
  BigInt rest = m;
  BigInt square = 1;
  BigInt free = 1;
  // Trial division suffices for the smooth norms produced by Gram-Schmidt on
  // Bernoulli polynomials (all prime factors are below 2n + 2).
  constexpr unsigned kTrialLimit = 1u << 20;
  for (unsigned d = 2; d <= kTrialLimit && BigInt(d) * d <= rest; ++d) {
    unsigned mult = 0;
    while (rest % d == 0) {
      rest /= d;
      ++mult;
    }
    for (unsigned i = 0; i < mult / 2; ++i) square *= d;
    if (mult % 2) free *= d;
  }
  if (rest > 1) {
    const BigInt root = boost::multiprecision::sqrt(rest);
    if (root * root == rest) {
      square *= root;
    } else {
      free *= rest;
    }
  }
  return {square, free};
}

SqrtScaled SqrtScaled::normalized(const BigInt& radicand, RationalPoly rational_part) {
  const auto [s, f] = squarefree_split(radicand);
  rational_part *= Rational(s);
  return {f, std::move(rational_part)};
}

bool SqrtScaled::equal_up_to_sign(const SqrtScaled& other) const {
  return radicand == other.radicand &&
         (rational_part == other.rational_part || rational_part == -other.rational_part);
}

std::string SqrtScaled::to_string() const {
  std::ostringstream os;
  os << "sqrt(" << radicand << ") * " << rational_part;
  return os.str();
}

RadicalNumber inner_product(const SqrtScaled& a, const SqrtScaled& b) {
  // sqrt(ra) sqrt(rb) = g sqrt((ra/g)(rb/g)) for squarefree ra, rb.
  const BigInt g = boost::integer::gcd(a.radicand, b.radicand);
  const Rational ip = inner_product(a.rational_part, b.rational_part);
  if (ip == 0) return {Rational(0), BigInt(1)};
  return {ip * Rational(g), (a.radicand / g) * (b.radicand / g)};
}

std::vector<Rational> bernoulli_numbers(int n_max) {
  if (n_max < 0) throw std::invalid_argument("bernoulli_numbers: n_max must be >= 0");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (unsigned n = 0; n <= static_cast<unsigned>(n_max); ++n) {
    // Kronecker: B_n = -sum_{j=1}^{n+1} (-1)^j / j * C(n+1, j) * sum_{k=1}^{j} k^n
    Rational sum = 0;
    BigInt power_sum = 0;
    for (unsigned j = 1; j <= n + 1; ++j) {
      power_sum += boost::multiprecision::pow(BigInt(j), n);
      Rational term = Rational(binomial(n + 1, j) * power_sum) / Rational(j);
      sum += (j % 2 ? -term : term);
    }
    // The formula yields the B_1 = +1/2 convention.
    out.push_back(n == 1 ? sum : -sum);
  }
  return out;
}

RationalPoly bernoulli_polynomial(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli_polynomial: n must be >= 0");
  const auto b = bernoulli_numbers(n);
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) coeffs[n - j] = Rational(binomial(n, j)) * b[j];
  return RationalPoly(std::move(coeffs));
}

OrthonormalBasis::OrthonormalBasis(std::vector<SqrtScaled> members) : members_(std::move(members)) {
  centred_.reserve(members_.size());
  power_.reserve(members_.size());
  const Rational half(1, 2);
  for (const auto& m : members_) {
    const long double scale = std::sqrt(m.radicand.convert_to<long double>());
    const RationalPoly shifted = compose_affine(m.rational_part, half, half);
    std::vector<long double> centred;
    for (const auto& c : shifted.coeffs()) centred.push_back(c.convert_to<long double>() * scale);
    auto power = to_doubles(m.rational_part);
    for (auto& c : power) c *= static_cast<double>(scale);
    centred_.push_back(std::move(centred));
    power_.push_back(std::move(power));
  }
}

long double OrthonormalBasis::eval_member(std::size_t k, long double t) const {
  long double acc = 0.0L;
  for (auto it = centred_[k].rbegin(); it != centred_[k].rend(); ++it) acc = acc * t + *it;
  return acc;
}

void OrthonormalBasis::eval_into(double x, std::span<double> out) const {
  const long double t = 2.0L * x - 1.0L;
  for (std::size_t k = 0; k < centred_.size(); ++k) out[k] = static_cast<double>(eval_member(k, t));
}

std::vector<double> OrthonormalBasis::eval(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream os;
    os << "evaluating basis outside [0,1] at x = " << x;
    warn(os.str());
  }
  std::vector<double> out(size());
  eval_into(x, out);
  return out;
}

double OrthonormalBasis::eval_combination(std::span<const double> c, double x) const {
  const long double t = 2.0L * x - 1.0L;
  long double sum = 0.0L;
  const std::size_t m = std::min(c.size(), centred_.size());
  for (std::size_t k = 0; k < m; ++k)
    if (c[k] != 0.0) sum += c[k] * eval_member(k, t);
  return static_cast<double>(sum);
}

OrthonormalBasis OrthonormalBasis::prefix(int m) const {
  if (m < 0 || m > order()) throw DimensionMismatch("prefix order out of range");
  return OrthonormalBasis(std::vector<SqrtScaled>(members_.begin(), members_.begin() + m + 1));
}

OrthonormalBasis gram_schmidt_basis(int n, const BasisOptions& options) {
  if (n < 0) throw InputError("basis order must be >= 0, got " + std::to_string(n));
  if (n > options.max_order) {
    throw OrderTooLarge("order " + std::to_string(n) + " exceeds the configured maximum " +
                        std::to_string(options.max_order) +
                        " (rational coefficients grow combinatorially with the order)");
  }
  std::vector<SqrtScaled> members;
  members.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const RationalPoly b = bernoulli_polynomial(k);
    RationalPoly v = b;
    // <B_k, phi_j> phi_j = r_j <B_k, p_j> p_j is rational for phi_j = sqrt(r_j) p_j.
    for (const auto& phi : members) {
      const Rational c = Rational(phi.radicand) * inner_product(b, phi.rational_part);
      if (c != 0) v -= phi.rational_part * c;
    }
    // v / sqrt(a/b) = sqrt(a b) / a * v
    const Rational norm2 = inner_product(v, v);
    const BigInt a = numerator(norm2);
    const BigInt d = denominator(norm2);
    auto member = SqrtScaled::normalized(a * d, v * Rational(BigInt(1), a));
    if (member.rational_part.leading() < 0) member.rational_part = -member.rational_part;
    members.push_back(std::move(member));
  }
  return OrthonormalBasis(std::move(members));
}

std::vector<double> eval_basis(const OrthonormalBasis& basis, double x) { return basis.eval(x); }

}  // namespace opmivp
