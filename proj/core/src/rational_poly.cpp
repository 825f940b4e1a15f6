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

#include "opmivp/rational_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace opmivp {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

RationalPoly::RationalPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
  normalize();
}

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return RationalPoly(std::move(v));
}

Rational RationalPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& RationalPoly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

void RationalPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Rational RationalPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string RationalPoly::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

RationalPoly add(const RationalPoly& p, const RationalPoly& q) { return p + q; }
RationalPoly mul(const RationalPoly& p, const RationalPoly& q) { return p * q; }

RationalPoly integrate_from_zero(const RationalPoly& p) {
  if (p.is_zero()) return {};
  const auto c = p.coeffs();
  std::vector<Rational> out(c.size() + 1);
  for (std::size_t k = 0; k < c.size(); ++k) out[k + 1] = c[k] / Rational(k + 1);
  return RationalPoly(std::move(out));
}

RationalPoly derivative(const RationalPoly& p) {
  const auto c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = c[k] * Rational(k);
  return RationalPoly(std::move(out));
}

Rational definite_integral_01(const RationalPoly& p) {
  Rational sum = 0;
  const auto c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) sum += c[k] / Rational(k + 1);
  return sum;
}

Rational inner_product(const RationalPoly& p, const RationalPoly& q) {
  // Avoids materializing the product: sum_ij p_i q_j / (i + j + 1).
  Rational sum = 0;
  const auto a = p.coeffs();
  const auto b = q.coeffs();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) sum += a[i] * b[j] / Rational(i + j + 1);
  }
  return sum;
}

RationalPoly compose_affine(const RationalPoly& p, const Rational& a, const Rational& h) {
  // Horner in polynomial arithmetic: acc = acc * (a + h x) + c_k.
  const RationalPoly inner({a, h});
  RationalPoly acc;
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= inner;
    acc += RationalPoly::constant(*it);
  }
  return acc;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

double eval(const RationalPoly& p, double x) {
  double acc = 0.0;
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

std::vector<double> to_doubles(const RationalPoly& p) {
  std::vector<double> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(to_double(c));
  return out;
}

std::ostream& operator<<(std::ostream& os, const RationalPoly& p) {
  os << '[';
  const auto c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) os << ", ";
    os << c[k];
  }
  return os << ']';
}

}  // namespace opmivp
