#include "parse.hpp"

#include <cctype>

namespace ffrec {

namespace {

constexpr long long kMaxExponent = 100000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RatFunc run() {
    RatFunc v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  RatFunc expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = (take() == '-');
    RatFunc v = term();
    if (negate) v = -v;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        take();
        RatFunc rhs = term();
        v = (c == '+') ? v + rhs : v - rhs;
      } else {
        return v;
      }
    }
  }

  RatFunc term() {
    RatFunc v = factor();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*' || c == '/') {
        std::size_t at = pos_;
        take();
        RatFunc rhs = factor();
        if (c == '/' && rhs.is_zero()) fail_at("division by zero", at);
        v = (c == '*') ? v * rhs : v / rhs;
      } else {
        return v;
      }
    }
  }

  RatFunc factor() {
    RatFunc v = base();
    skip_ws();
    if (peek() == '^') {
      std::size_t at = pos_;
      take();
      long long e = exponent();
      if (e < 0 && v.is_zero()) fail_at("division by zero", at);
      v = pow(v, e);
    }
    return v;
  }

  RatFunc base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      take();
      RatFunc v = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      take();
      return v;
    }
    if (c == 'x') {
      take();
      return RatFunc::x();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc(Rat(integer()));
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  long long exponent() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      take();
      neg = true;
    }
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent");
    Int v = integer();
    if (v > kMaxExponent) fail("exponent too large");
    long long e = v.convert_to<long long>();
    return neg ? -e : e;
  }

  Int integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) { throw ParseError(msg, at); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text) { return Parser(text).run(); }

Poly parse_poly(std::string_view text) {
  RatFunc f = parse_ratfunc(text);
  if (!(f.den() == Poly(Rat(1))))
    throw std::domain_error("expression is not a polynomial: " + f.to_string());
  return f.num();
}

std::string format_parse_error(const ParseError& err, std::string_view text) {
  std::string out = "parse error: ";
  out += err.what();
  out += "\n  ";
  out += text;
  out += "\n  ";
  out += std::string(err.position(), ' ');
  out += "^";
  return out;
}

}  // namespace ffrec
