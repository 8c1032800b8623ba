#pragma once

#include "radsolve/rational.hpp"
#include "radsolve/rational_function.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace radsolve {

/// Expression tree of the equation grammar. Value type; children are owned.
struct Expr {
  enum class Kind { constant, variable, parameter, add, sub, neg, mul, div, pow, sqrt };

  Kind kind = Kind::constant;
  Rational value;          // constant
  std::string name;        // parameter
  unsigned exponent = 0;   // pow
  std::vector<Expr> args;  // operands, in source order

  static Expr constant(Rational v);
  static Expr variable();
  static Expr parameter(std::string name);
  static Expr unary(Kind kind, Expr operand);
  static Expr binary(Kind kind, Expr lhs, Expr rhs);
  static Expr power(Expr base, unsigned exponent);

  friend bool operator==(const Expr &, const Expr &) = default;
};

Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator/(Expr a, Expr b);
Expr operator-(Expr a);
Expr sqrt(Expr a);

/// Text that parses back to the same tree.
std::string to_string(const Expr &e);

/// Replaces bound parameters by constants; unbound ones stay.
Expr bind(const Expr &e, const std::map<std::string, Rational> &bindings);

bool has_sqrt(const Expr &e);
bool has_parameter(const Expr &e);
/// Names of every parameter identifier in e.
std::set<std::string> parameter_names(const Expr &e);

/// Radical-free, parameter-free expression as a reduced rational function.
/// Throws UnsupportedForm otherwise, std::domain_error on division by zero.
RationalFunction to_rational_function(const Expr &e);

/// An equation as two expression trees.
struct EquationAst {
  Expr lhs;
  Expr rhs;
  friend bool operator==(const EquationAst &, const EquationAst &) = default;
};

std::string to_string(const EquationAst &eq);

} // namespace radsolve
