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

#include "opmivp/integrable_function.hpp"

#include <cmath>
#include <sstream>

namespace opmivp {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string number_label(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

IntegrableFunction IntegrableFunction::constant(double value) { return IntegrableFunction(Constant{value}); }

IntegrableFunction IntegrableFunction::polynomial(RationalPoly p) {
  if (p.degree() <= 0) return constant(p.is_zero() ? 0.0 : to_double(p.leading()));
  return IntegrableFunction(Polynomial{std::move(p)});
}

IntegrableFunction IntegrableFunction::closure(std::function<double(double)> fn, std::string label) {
  return IntegrableFunction(Closure{std::move(fn), std::move(label)});
}

IntegrableFunction IntegrableFunction::from_expr(const Expr& e) {
  if (e.is_constant()) return constant(eval_expr(e, 0.0));
  if (auto p = try_polynomial(e)) return polynomial(std::move(*p));
  return closure([e](double x) { return eval_expr(e, x); }, to_string(e));
}

double IntegrableFunction::operator()(double x) const {
  return std::visit(Overloaded{
                        [](const Constant& c) { return c.value; },
                        [x](const Polynomial& p) { return eval(p.poly, x); },
                        [x](const Closure& c) { return c.fn(x); },
                    },
                    repr_);
}

std::optional<double> IntegrableFunction::constant_value() const {
  if (const auto* c = std::get_if<Constant>(&repr_)) return c->value;
  return std::nullopt;
}

std::optional<RationalPoly> IntegrableFunction::as_polynomial() const {
  if (const auto* c = std::get_if<Constant>(&repr_)) {
    if (!std::isfinite(c->value)) return std::nullopt;
    return RationalPoly::constant(Rational(c->value));
  }
  if (const auto* p = std::get_if<Polynomial>(&repr_)) return p->poly;
  return std::nullopt;
}

std::string IntegrableFunction::describe() const {
  return std::visit(Overloaded{
                        [](const Constant& c) { return number_label(c.value); },
                        [](const Polynomial& p) { return "poly" + p.poly.to_string(); },
                        [](const Closure& c) { return c.label; },
                    },
                    repr_);
}

IntegrableFunction IntegrableFunction::affine_substituted(double a, double h) const {
  if (a == 0.0 && h == 1.0) return *this;
  return std::visit(Overloaded{
                        [&](const Constant&) { return *this; },
                        [&](const Polynomial& p) {
                          return polynomial(compose_affine(p.poly, Rational(a), Rational(h)));
                        },
                        [&](const Closure& c) {
                          auto fn = c.fn;
                          return closure([fn, a, h](double t) { return fn(a + h * t); },
                                         c.label + " @ (" + number_label(a) + " + " + number_label(h) + "*x)");
                        },
                    },
                    repr_);
}

IntegrableFunction operator+(const IntegrableFunction& f, const IntegrableFunction& g) {
  if (f.is_constant() && g.is_constant()) return IntegrableFunction::constant(*f.constant_value() + *g.constant_value());
  auto pf = f.as_polynomial();
  auto pg = g.as_polynomial();
  if (pf && pg) return IntegrableFunction::polynomial(*pf + *pg);
  return IntegrableFunction::closure([f, g](double x) { return f(x) + g(x); },
                                     "(" + f.describe() + ") + (" + g.describe() + ")");
}

IntegrableFunction operator*(const IntegrableFunction& f, const IntegrableFunction& g) {
  if (f.is_constant() && g.is_constant()) return IntegrableFunction::constant(*f.constant_value() * *g.constant_value());
  auto pf = f.as_polynomial();
  auto pg = g.as_polynomial();
  if (pf && pg) return IntegrableFunction::polynomial(*pf * *pg);
  return IntegrableFunction::closure([f, g](double x) { return f(x) * g(x); },
                                     "(" + f.describe() + ") * (" + g.describe() + ")");
}

IntegrableFunction operator*(double s, const IntegrableFunction& f) {
  return IntegrableFunction::constant(s) * f;
}

}  // namespace opmivp
