#ifndef GINV_PARSE_HPP
#define GINV_PARSE_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "ginv/functional.hpp"

namespace ginv {

/// Syntax or validation error at a 1-based line and column of the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, int line, int column);
  const std::string& message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

/// Grammar shared by all entry points:
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' ['-'] integer)?
///   primary := integer | 'e' | 'x' | 'exp' '(' expr ')' | '(' expr ')'
///            | 'E' '[' integer ']' ['D' ['^' integer]] | 'int' '(' expr ')'
/// Division is only by nonzero constants; the argument of exp must be an
/// integer multiple of x.
ExpPoly parse_exppoly(std::string_view text);
BoundaryFunctional parse_functional(std::string_view text);
/// A constant expression such as "5/12" or "(e^2+1)/e".
RatFuncE parse_scalar(std::string_view text);
/// Constant expression that must lie in Q.
Rational parse_rational(std::string_view text);
/// Polynomial in D with rational coefficients, e.g. "D^4 - D^2".
DiffOp parse_diffop(std::string_view text);

}  // namespace ginv

#endif  // GINV_PARSE_HPP
