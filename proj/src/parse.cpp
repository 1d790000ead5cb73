#include "lpdeinv/parse.hpp"

#include <cctype>
#include <climits>
#include <string>

#include "lpdeinv/errors.hpp"

namespace lpdeinv {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  Expr expr() {
    Expr lhs = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        lhs = lhs + term();
      } else if (c == '-') {
        ++pos_;
        lhs = lhs - term();
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        lhs = lhs * factor();
      } else if (c == '/') {
        ++pos_;
        lhs = lhs / factor();
      } else {
        return lhs;
      }
    }
  }

  Expr factor() {
    int minus = 0;
    while (peek() == '-') {
      ++pos_;
      ++minus;
    }
    Expr b = base();
    if (peek() == '^') {
      ++pos_;
      b = pow(b, signed_integer());
    }
    return minus % 2 == 1 ? -b : b;
  }

  Expr base() {
    const char c = peek();
    if (c == 'x' || c == 'y') {
      ++pos_;
      return Expr::variable(c == 'x' ? Var::X : Var::Y);
    }
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Expr(Rat(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  int signed_integer() {
    bool negative = false;
    if (peek() == '-') {
      ++pos_;
      negative = true;
    } else if (peek() == '+') {
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent");
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > INT_MAX / 2) fail("exponent out of range");
      ++pos_;
    }
    return static_cast<int>(negative ? -value : value);
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(msg, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace lpdeinv
