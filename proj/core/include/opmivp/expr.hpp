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

#include "opmivp/rational_poly.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace opmivp {

enum class Function { Sin, Cos, Tan, Exp, Log, Sqrt, Sinh, Cosh, Tanh, Abs };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };

std::string_view function_name(Function f) noexcept;
std::optional<Function> function_from_name(std::string_view name) noexcept;

struct ExprNode;

/// Immutable expression tree in the single variable x. Copies share nodes.
class Expr {
 public:
  static Expr number(double value);
  static Expr variable();
  static Expr negate(Expr operand);
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);
  static Expr call(Function fn, Expr arg);

  const ExprNode& node() const noexcept { return *node_; }

  /// True when the tree contains no x.
  bool is_constant() const;

  /// Structural equality.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  explicit Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const ExprNode> node_;
};

namespace node {
struct Number {
  double value;
};
struct Variable {};
struct Negate {
  Expr operand;
};
struct Binary {
  BinaryOp op;
  Expr lhs;
  Expr rhs;
};
struct Call {
  Function fn;
  Expr arg;
};
}  // namespace node

struct ExprNode {
  std::variant<node::Number, node::Variable, node::Negate, node::Binary, node::Call> value;
};

/// Parses the expression grammar described in docs/expr-grammar.md.
///
/// Precedence from tightest: `^` (right associative, exponent must not
/// depend on x), unary minus, `*` `/`, `+` `-` (left associative). There is
/// no implicit multiplication. Throws ParseError with a character offset.
Expr parse(std::string_view source);

/// IEEE double evaluation. Domain violations come back as inf or NaN; the
/// caller decides whether that is fatal. Integer exponents are evaluated by
/// repeated squaring.
double eval_expr(const Expr& e, double x);

/// Minimal-parenthesis rendering that parses back to the same tree.
std::string to_string(const Expr& e);

/// The tree with x replaced by (a + h*x).
Expr substitute_affine(const Expr& e, double a, double h);

/// Exact polynomial form when e is built from +, -, *, division by a
/// constant, non-negative integer powers and constant subexpressions.
/// Constant subexpressions are evaluated in double and taken exactly.
std::optional<RationalPoly> try_polynomial(const Expr& e);

}  // namespace opmivp
