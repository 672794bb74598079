#include "tauforge/expr.hpp"

#include <cctype>

namespace tauforge {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::unique_ptr<Expr> parse() {
    auto e = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static std::unique_ptr<Expr> binary(Expr::Kind kind, std::unique_ptr<Expr> lhs, std::unique_ptr<Expr> rhs,
                                      std::size_t pos) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->position = pos;
    e->args.push_back(std::move(lhs));
    e->args.push_back(std::move(rhs));
    return e;
  }

  std::unique_ptr<Expr> expr() {
    auto lhs = term();
    for (;;) {
      const std::size_t at = pos_;
      if (accept('+'))
        lhs = binary(Expr::Kind::add, std::move(lhs), term(), at);
      else if (accept('-'))
        lhs = binary(Expr::Kind::sub, std::move(lhs), term(), at);
      else
        return lhs;
    }
  }

  std::unique_ptr<Expr> term() {
    auto lhs = unary();
    for (;;) {
      const std::size_t at = pos_;
      if (accept('*'))
        lhs = binary(Expr::Kind::mul, std::move(lhs), unary(), at);
      else if (accept('/'))
        lhs = binary(Expr::Kind::div, std::move(lhs), unary(), at);
      else
        return lhs;
    }
  }

  std::unique_ptr<Expr> unary() {
    const std::size_t at = pos_;
    if (accept('-')) {
      auto e = std::make_unique<Expr>();
      e->kind = Expr::Kind::neg;
      e->position = at;
      e->args.push_back(unary());
      return e;
    }
    return power();
  }

  std::unique_ptr<Expr> power() {
    auto base = atom();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    const bool negative = accept('-');
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer exponent", pos_);
    if (pos_ - start > 6) throw ParseError("exponent too large", start);
    int exponent = std::stoi(std::string(text_.substr(start, pos_ - start)));
    auto e = std::make_unique<Expr>();
    e->kind = Expr::Kind::pow;
    e->position = at;
    e->exponent = negative ? -exponent : exponent;
    e->args.push_back(std::move(base));
    return e;
  }

  std::unique_ptr<Expr> atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const std::size_t at = pos_;
    const char c = text_[pos_];
    auto e = std::make_unique<Expr>();
    e->position = at;
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      e->kind = Expr::Kind::number;
      e->number = Rational(std::string(text_.substr(at, pos_ - at)));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      e->kind = Expr::Kind::symbol;
      e->symbol = std::string(text_.substr(at, pos_ - at));
      return e;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<Expr> parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace tauforge
