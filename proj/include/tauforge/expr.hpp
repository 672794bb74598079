#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tauforge/error.hpp"
#include "tauforge/laurent.hpp"

namespace tauforge {

/// Syntax tree for the shared text grammar used by scalars, time polynomials and
/// noncommutative polynomials:
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' '-'? integer)?
///   atom   := integer | identifier | '(' expr ')'
///
/// Identifiers start with a letter and continue with letters, digits or '_'.
struct Expr {
  enum class Kind { number, symbol, add, sub, mul, div, neg, pow };
  Kind kind = Kind::number;
  Rational number;
  std::string symbol;
  int exponent = 0;
  std::vector<std::unique_ptr<Expr>> args;
  std::size_t position = 0;
};

std::unique_ptr<Expr> parse_expr(std::string_view text);

/// Evaluates an expression tree into a ring T.
///
/// `Ops` provides: T number(const Rational&), T symbol(const std::string&, std::size_t pos),
/// T divide(const T&, const T&, std::size_t pos) and T power(const T&, int, std::size_t pos).
template <class T, class Ops>
T evaluate_expr(const Expr& e, Ops& ops) {
  switch (e.kind) {
    case Expr::Kind::number:
      return ops.number(e.number);
    case Expr::Kind::symbol:
      return ops.symbol(e.symbol, e.position);
    case Expr::Kind::add:
      return evaluate_expr<T>(*e.args[0], ops) + evaluate_expr<T>(*e.args[1], ops);
    case Expr::Kind::sub:
      return evaluate_expr<T>(*e.args[0], ops) - evaluate_expr<T>(*e.args[1], ops);
    case Expr::Kind::mul:
      return evaluate_expr<T>(*e.args[0], ops) * evaluate_expr<T>(*e.args[1], ops);
    case Expr::Kind::div:
      return ops.divide(evaluate_expr<T>(*e.args[0], ops), evaluate_expr<T>(*e.args[1], ops), e.position);
    case Expr::Kind::neg:
      return -evaluate_expr<T>(*e.args[0], ops);
    case Expr::Kind::pow:
      return ops.power(evaluate_expr<T>(*e.args[0], ops), e.exponent, e.position);
  }
  throw ParseError("malformed expression", e.position);
}

}  // namespace tauforge
