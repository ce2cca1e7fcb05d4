#pragma once

#include <stdexcept>
#include <string>

#include "heatsym/heatexpr.hpp"

namespace heatsym {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(size_t pos, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Grammar (whitespace insensitive):
//   input    := expr tag?
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*
//   factor   := base ('^' exponent)?
//   base     := 'exp' '(' expr ')' | '(' expr ')' | 't' | 'x' | integer
//   exponent := integer | '(' ['-'] integer ['/' integer] ')'
//   tag      := '{' 't' ('>'|'<') rational '}'
// Rational constants are spelled with the division operator, e.g. 1/2.
// Half-integer exponents are only admitted on bases that are affine in t
// (or constant); exp(...) requires a rational-function argument. Anything
// else is outside the HeatExpr class and rejected.
HeatExpr parse_expr(const std::string& text);

// Canonical fully parenthesized form; parse_expr(print_expr(e)) == e.
std::string print_expr(const HeatExpr& e);

RatFunc parse_ratfunc(const std::string& text);  // rejects factor/exp parts

}  // namespace heatsym
