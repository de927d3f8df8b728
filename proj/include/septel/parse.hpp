#pragma once

// Recursive-descent expression parser.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' integer)?
//   base   := integer | ident | '(' expr ')' | '-' factor

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "septel/ratfunc.hpp"

namespace septel {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

struct Expr {
  enum class Kind { Integer, Variable, Add, Sub, Mul, Div, Pow, Neg };
  Kind kind;
  Int value;         // Integer literal, or exponent for Pow
  std::string name;  // Variable
  int line = 1, column = 1;
  std::unique_ptr<Expr> lhs, rhs;
};

std::unique_ptr<Expr> parse_ast(const std::string& text);

/// Lowers with every identifier looked up in names; unknown identifiers are
/// reported with their position.
RatFunc lower_ratfunc(const Expr& e, const VarNames& names);
RatFunc parse_ratfunc(const std::string& text, const VarNames& names = VarNames());
MPoly parse_poly(const std::string& text, const VarNames& names = VarNames());

/// Names with t = 0 and the given parameters at ids 1, 2, ...
VarNames make_names(const std::vector<std::string>& params);

}  // namespace septel
