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

#include "opmivp/expr.hpp"

#include "opmivp/error.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <utility>

namespace opmivp {
namespace {

constexpr std::array<std::pair<Function, std::string_view>, 10> kFunctions{{
    {Function::Sin, "sin"},
    {Function::Cos, "cos"},
    {Function::Tan, "tan"},
    {Function::Exp, "exp"},
    {Function::Log, "log"},
    {Function::Sqrt, "sqrt"},
    {Function::Sinh, "sinh"},
    {Function::Cosh, "cosh"},
    {Function::Tanh, "tanh"},
    {Function::Abs, "abs"},
}};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string_view text;
  double value = 0.0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    const std::size_t start = i_;
    if (i_ == src_.size()) return {Tok::End, start, {}};
    const char c = src_[i_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number(start);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
        ++i_;
      return {Tok::Ident, start, src_.substr(start, i_ - start)};
    }
    ++i_;
    switch (c) {
      case '+': return {Tok::Plus, start, src_.substr(start, 1)};
      case '-': return {Tok::Minus, start, src_.substr(start, 1)};
      case '*': return {Tok::Star, start, src_.substr(start, 1)};
      case '/': return {Tok::Slash, start, src_.substr(start, 1)};
      case '^': return {Tok::Caret, start, src_.substr(start, 1)};
      case '(': return {Tok::LParen, start, src_.substr(start, 1)};
      case ')': return {Tok::RParen, start, src_.substr(start, 1)};
      default: break;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

 private:
  bool digit_at(std::size_t k) const {
    return k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]));
  }

  Token number(std::size_t start) {
    while (digit_at(i_)) ++i_;
    if (i_ < src_.size() && src_[i_] == '.') {
      ++i_;
      while (digit_at(i_)) ++i_;
    }
    if (i_ < src_.size() && (src_[i_] == 'e' || src_[i_] == 'E')) {
      std::size_t k = i_ + 1;
      if (k < src_.size() && (src_[k] == '+' || src_[k] == '-')) ++k;
      if (digit_at(k)) {
        i_ = k;
        while (digit_at(i_)) ++i_;
      }
    }
    const std::string_view text = src_.substr(start, i_ - start);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw ParseError("malformed number '" + std::string(text) + "'", start);
    }
    return {Tok::Number, start, text, value};
  }

  std::string_view src_;
  std::size_t i_ = 0;
};

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { advance(); }

  Expr parse_all() {
    if (tok_.kind == Tok::End) throw ParseError("empty expression", tok_.pos);
    Expr e = expression();
    if (tok_.kind != Tok::End) unexpected();
    return e;
  }

 private:
  void advance() { tok_ = lexer_.next(); }

  [[noreturn]] void unexpected() const {
    if (tok_.kind == Tok::End) throw ParseError("unexpected end of input", tok_.pos);
    throw ParseError("unexpected token '" + std::string(tok_.text) + "'", tok_.pos);
  }

  void expect(Tok kind, const char* what) {
    if (tok_.kind != kind) {
      if (tok_.kind == Tok::End) throw ParseError(std::string("expected ") + what, tok_.pos);
      throw ParseError(std::string("expected ") + what + ", found '" + std::string(tok_.text) + "'",
                       tok_.pos);
    }
    advance();
  }

  Expr expression() {
    Expr lhs = term();
    while (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
      const BinaryOp op = tok_.kind == Tok::Plus ? BinaryOp::Add : BinaryOp::Sub;
      advance();
      lhs = Expr::binary(op, std::move(lhs), term());
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    while (tok_.kind == Tok::Star || tok_.kind == Tok::Slash) {
      const BinaryOp op = tok_.kind == Tok::Star ? BinaryOp::Mul : BinaryOp::Div;
      advance();
      lhs = Expr::binary(op, std::move(lhs), unary());
    }
    return lhs;
  }

  Expr unary() {
    if (tok_.kind == Tok::Minus) {
      advance();
      return Expr::negate(unary());
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (tok_.kind != Tok::Caret) return base;
    const std::size_t caret = tok_.pos;
    advance();
    // The exponent is a unary expression, which makes ^ right associative.
    Expr exponent = unary();
    if (!exponent.is_constant()) throw ParseError("exponent must not depend on x", caret);
    return Expr::binary(BinaryOp::Pow, std::move(base), std::move(exponent));
  }

  Expr primary() {
    switch (tok_.kind) {
      case Tok::Number: {
        const double v = tok_.value;
        advance();
        return Expr::number(v);
      }
      case Tok::LParen: {
        advance();
        Expr inner = expression();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident: {
        const Token id = tok_;
        advance();
        if (id.text == "x") return Expr::variable();
        const auto fn = function_from_name(id.text);
        if (!fn) throw ParseError("unknown function '" + std::string(id.text) + "'", id.pos);
        expect(Tok::LParen, "'(' after function name");
        Expr arg = expression();
        expect(Tok::RParen, "')'");
        return Expr::call(*fn, std::move(arg));
      }
      default: unexpected();
    }
  }

  Lexer lexer_;
  Token tok_{Tok::End, 0, {}};
};

// ---------------------------------------------------------------------------
// Evaluation

double int_power(double base, long long n) {
  const bool invert = n < 0;
  unsigned long long k = invert ? -static_cast<unsigned long long>(n) : n;
  double result = 1.0;
  while (k) {
    if (k & 1u) result *= base;
    base *= base;
    k >>= 1u;
  }
  return invert ? 1.0 / result : result;
}

double apply(Function f, double v) {
  switch (f) {
    case Function::Sin: return std::sin(v);
    case Function::Cos: return std::cos(v);
    case Function::Tan: return std::tan(v);
    case Function::Exp: return std::exp(v);
    case Function::Log: return std::log(v);
    case Function::Sqrt: return std::sqrt(v);
    case Function::Sinh: return std::sinh(v);
    case Function::Cosh: return std::cosh(v);
    case Function::Tanh: return std::tanh(v);
    case Function::Abs: return std::abs(v);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double power(double base, double exponent) {
  constexpr double kMaxIntExponent = 1 << 20;
  if (std::nearbyint(exponent) == exponent && std::abs(exponent) <= kMaxIntExponent) {
    return int_power(base, static_cast<long long>(exponent));
  }
  return std::pow(base, exponent);
}

// ---------------------------------------------------------------------------
// Printing

// Binding strength of the construct at the root of a subtree.
enum Prec { kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kAtom = 5 };

int precedence(const Expr& e) {
  return std::visit(Overloaded{
                        [](const node::Number& n) { return n.value < 0 ? int{kUnary} : int{kAtom}; },
                        [](const node::Variable&) { return int{kAtom}; },
                        [](const node::Negate&) { return int{kUnary}; },
                        [](const node::Binary& b) {
                          switch (b.op) {
                            case BinaryOp::Add:
                            case BinaryOp::Sub: return int{kSum};
                            case BinaryOp::Mul:
                            case BinaryOp::Div: return int{kProduct};
                            case BinaryOp::Pow: return int{kPower};
                          }
                          return int{kAtom};
                        },
                        [](const node::Call&) { return int{kAtom}; },
                    },
                    e.node().value);
}

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

void print(const Expr& e, int min_prec, std::string& out);

void print_child(const Expr& e, int min_prec, std::string& out) {
  if (precedence(e) < min_prec) {
    out += '(';
    print(e, 0, out);
    out += ')';
  } else {
    print(e, min_prec, out);
  }
}

void print(const Expr& e, int /*min_prec*/, std::string& out) {
  std::visit(Overloaded{
                 [&](const node::Number& n) { out += format_number(n.value); },
                 [&](const node::Variable&) { out += 'x'; },
                 [&](const node::Negate& n) {
                   out += '-';
                   print_child(n.operand, kUnary, out);
                 },
                 [&](const node::Binary& b) {
                   switch (b.op) {
                     case BinaryOp::Add:
                     case BinaryOp::Sub:
                       print_child(b.lhs, kSum, out);
                       out += b.op == BinaryOp::Add ? " + " : " - ";
                       print_child(b.rhs, kProduct, out);
                       break;
                     case BinaryOp::Mul:
                     case BinaryOp::Div:
                       print_child(b.lhs, kProduct, out);
                       out += b.op == BinaryOp::Mul ? '*' : '/';
                       print_child(b.rhs, kUnary, out);
                       break;
                     case BinaryOp::Pow:
                       print_child(b.lhs, kAtom, out);
                       out += '^';
                       print_child(b.rhs, kUnary, out);
                       break;
                   }
                 },
                 [&](const node::Call& c) {
                   out += function_name(c.fn);
                   out += '(';
                   print(c.arg, 0, out);
                   out += ')';
                 },
             },
             e.node().value);
}

}  // namespace

std::string_view function_name(Function f) noexcept {
  for (const auto& [fn, name] : kFunctions)
    if (fn == f) return name;
  return "?";
}

std::optional<Function> function_from_name(std::string_view name) noexcept {
  for (const auto& [fn, n] : kFunctions)
    if (n == name) return fn;
  return std::nullopt;
}

Expr Expr::number(double value) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{node::Number{value}}));
}
Expr Expr::variable() { return Expr(std::make_shared<const ExprNode>(ExprNode{node::Variable{}})); }
Expr Expr::negate(Expr operand) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{node::Negate{std::move(operand)}}));
}
Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const ExprNode>(
      ExprNode{node::Binary{op, std::move(lhs), std::move(rhs)}}));
}
Expr Expr::call(Function fn, Expr arg) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{node::Call{fn, std::move(arg)}}));
}

bool Expr::is_constant() const {
  return std::visit(Overloaded{
                        [](const node::Number&) { return true; },
                        [](const node::Variable&) { return false; },
                        [](const node::Negate& n) { return n.operand.is_constant(); },
                        [](const node::Binary& b) { return b.lhs.is_constant() && b.rhs.is_constant(); },
                        [](const node::Call& c) { return c.arg.is_constant(); },
                    },
                    node_->value);
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = a.node().value;
  const auto& y = b.node().value;
  if (x.index() != y.index()) return false;
  return std::visit(
      Overloaded{
          [&](const node::Number& n) { return n.value == std::get<node::Number>(y).value; },
          [&](const node::Variable&) { return true; },
          [&](const node::Negate& n) { return n.operand == std::get<node::Negate>(y).operand; },
          [&](const node::Binary& bn) {
            const auto& o = std::get<node::Binary>(y);
            return bn.op == o.op && bn.lhs == o.lhs && bn.rhs == o.rhs;
          },
          [&](const node::Call& c) {
            const auto& o = std::get<node::Call>(y);
            return c.fn == o.fn && c.arg == o.arg;
          },
      },
      x);
}

Expr parse(std::string_view source) { return Parser(source).parse_all(); }

double eval_expr(const Expr& e, double x) {
  return std::visit(Overloaded{
                        [](const node::Number& n) { return n.value; },
                        [&](const node::Variable&) { return x; },
                        [&](const node::Negate& n) { return -eval_expr(n.operand, x); },
                        [&](const node::Binary& b) {
                          const double l = eval_expr(b.lhs, x);
                          const double r = eval_expr(b.rhs, x);
                          switch (b.op) {
                            case BinaryOp::Add: return l + r;
                            case BinaryOp::Sub: return l - r;
                            case BinaryOp::Mul: return l * r;
                            case BinaryOp::Div: return l / r;
                            case BinaryOp::Pow: return power(l, r);
                          }
                          return std::numeric_limits<double>::quiet_NaN();
                        },
                        [&](const node::Call& c) { return apply(c.fn, eval_expr(c.arg, x)); },
                    },
                    e.node().value);
}

std::string to_string(const Expr& e) {
  std::string out;
  print(e, 0, out);
  return out;
}

Expr substitute_affine(const Expr& e, double a, double h) {
  return std::visit(
      Overloaded{
          [&](const node::Number&) { return e; },
          [&](const node::Variable&) {
            Expr scaled = h == 1.0 ? e : Expr::binary(BinaryOp::Mul, Expr::number(h), e);
            return a == 0.0 ? scaled : Expr::binary(BinaryOp::Add, Expr::number(a), scaled);
          },
          [&](const node::Negate& n) { return Expr::negate(substitute_affine(n.operand, a, h)); },
          [&](const node::Binary& b) {
            return Expr::binary(b.op, substitute_affine(b.lhs, a, h), substitute_affine(b.rhs, a, h));
          },
          [&](const node::Call& c) { return Expr::call(c.fn, substitute_affine(c.arg, a, h)); },
      },
      e.node().value);
}

std::optional<RationalPoly> try_polynomial(const Expr& e) {
  if (e.is_constant()) {
    const double v = eval_expr(e, 0.0);
    if (!std::isfinite(v)) return std::nullopt;
    return RationalPoly::constant(Rational(v));
  }
  return std::visit(
      Overloaded{
          [](const node::Number&) -> std::optional<RationalPoly> { return std::nullopt; },
          [](const node::Variable&) -> std::optional<RationalPoly> { return RationalPoly::monomial(1); },
          [](const node::Negate& n) -> std::optional<RationalPoly> {
            auto p = try_polynomial(n.operand);
            if (!p) return std::nullopt;
            return -*p;
          },
          [](const node::Binary& b) -> std::optional<RationalPoly> {
            auto l = try_polynomial(b.lhs);
            if (!l) return std::nullopt;
            if (b.op == BinaryOp::Pow) {
              const double k = eval_expr(b.rhs, 0.0);
              if (!(k >= 0 && k <= 64 && std::nearbyint(k) == k)) return std::nullopt;
              RationalPoly acc = RationalPoly::constant(1);
              for (int i = 0; i < static_cast<int>(k); ++i) acc *= *l;
              return acc;
            }
            auto r = try_polynomial(b.rhs);
            if (!r) return std::nullopt;
            switch (b.op) {
              case BinaryOp::Add: return *l + *r;
              case BinaryOp::Sub: return *l - *r;
              case BinaryOp::Mul: return *l * *r;
              case BinaryOp::Div:
                if (r->degree() != 0) return std::nullopt;
                return *l * (Rational(1) / r->leading());
              case BinaryOp::Pow: break;
            }
            return std::nullopt;
          },
          [](const node::Call&) -> std::optional<RationalPoly> { return std::nullopt; },
      },
      e.node().value);
}

}  // namespace opmivp
