#pragma once

#include "ratfunc.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace ffrec {

// Raised on malformed input; position() is the byte offset into the source
// text, for caret diagnostics.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Grammar:
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' ('-')? integer)?
//   base   := integer | 'x' | '(' expr ')'
// Whitespace is insignificant; rationals are written a/b.
RatFunc parse_ratfunc(std::string_view text);

// Same grammar, but the value must be a polynomial (denominator 1);
// otherwise throws std::domain_error.
Poly parse_poly(std::string_view text);

// Renders a caret diagnostic for a ParseError against its source text.
std::string format_parse_error(const ParseError& err, std::string_view text);

}  // namespace ffrec
