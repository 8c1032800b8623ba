#include "radsolve/expr.hpp"

#include "radsolve/errors.hpp"

#include <algorithm>
#include <cctype>

namespace radsolve {

Expr Expr::constant(Rational v) {
  Expr e;
  e.kind = Kind::constant;
  e.value = std::move(v);
  return e;
}

Expr Expr::variable() {
  Expr e;
  e.kind = Kind::variable;
  return e;
}

Expr Expr::parameter(std::string name) {
  Expr e;
  e.kind = Kind::parameter;
  e.name = std::move(name);
  return e;
}

Expr Expr::unary(Kind kind, Expr operand) {
  Expr e;
  e.kind = kind;
  e.args.push_back(std::move(operand));
  return e;
}

Expr Expr::binary(Kind kind, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = kind;
  e.args.push_back(std::move(lhs));
  e.args.push_back(std::move(rhs));
  return e;
}

Expr Expr::power(Expr base, unsigned exponent) {
  Expr e = unary(Kind::pow, std::move(base));
  e.exponent = exponent;
  return e;
}

Expr operator+(Expr a, Expr b) { return Expr::binary(Expr::Kind::add, std::move(a), std::move(b)); }
Expr operator-(Expr a, Expr b) { return Expr::binary(Expr::Kind::sub, std::move(a), std::move(b)); }
Expr operator*(Expr a, Expr b) { return Expr::binary(Expr::Kind::mul, std::move(a), std::move(b)); }
Expr operator/(Expr a, Expr b) { return Expr::binary(Expr::Kind::div, std::move(a), std::move(b)); }
Expr operator-(Expr a) { return Expr::unary(Expr::Kind::neg, std::move(a)); }
Expr sqrt(Expr a) { return Expr::unary(Expr::Kind::sqrt, std::move(a)); }

namespace {

// Binding strength: expr < term < factor < atom.
enum Level { level_expr = 0, level_term = 1, level_factor = 2, level_atom = 3 };

Level level_of(const Expr &e) {
  switch (e.kind) {
  case Expr::Kind::add:
  case Expr::Kind::sub:
    return level_expr;
  case Expr::Kind::mul:
  case Expr::Kind::div:
    return level_term;
  case Expr::Kind::neg:
  case Expr::Kind::pow:
    return level_factor;
  case Expr::Kind::constant:
    // Negative constants only arise from bindings; print them parenthesized.
    return e.value < 0 ? level_expr : level_atom;
  default:
    return level_atom;
  }
}

std::string wrap(const Expr &e, Level needed) {
  std::string s = to_string(e);
  return level_of(e) >= needed ? s : "(" + s + ")";
}

} // namespace

std::string to_string(const Expr &e) {
  switch (e.kind) {
  case Expr::Kind::constant:
    return e.value < 0 ? "-" + to_string(Rational(-e.value)) : to_string(e.value);
  case Expr::Kind::variable:
    return "x";
  case Expr::Kind::parameter:
    return e.name;
  case Expr::Kind::add:
    return wrap(e.args[0], level_expr) + "+" + wrap(e.args[1], level_term);
  case Expr::Kind::sub:
    return wrap(e.args[0], level_expr) + "-" + wrap(e.args[1], level_term);
  case Expr::Kind::mul:
    return wrap(e.args[0], level_term) + "*" + wrap(e.args[1], level_factor);
  case Expr::Kind::div: {
    // An integer literal followed by "/digits" would lex as one rational
    // literal, so divisors starting with a digit are always parenthesized.
    std::string rhs = wrap(e.args[1], level_factor);
    if (std::isdigit(static_cast<unsigned char>(rhs.front())))
      rhs = "(" + rhs + ")";
    return wrap(e.args[0], level_term) + "/" + rhs;
  }
  case Expr::Kind::neg:
    // "-" applies to an atom (optionally raised to a power).
    if (e.args[0].kind == Expr::Kind::pow)
      return "-" + to_string(e.args[0]);
    return "-" + wrap(e.args[0], level_atom);
  case Expr::Kind::pow: {
    const Expr &b = e.args[0];
    std::string base = (b.kind == Expr::Kind::constant && b.value >= 0 &&
                        b.value.get_den() != 1)
                           ? to_string(b) // "p/q" is a single literal
                           : wrap(b, level_atom);
    return base + "^" + std::to_string(e.exponent);
  }
  case Expr::Kind::sqrt:
    return "sqrt(" + to_string(e.args[0]) + ")";
  }
  return "?";
}

std::string to_string(const EquationAst &eq) {
  return to_string(eq.lhs) + "=" + to_string(eq.rhs);
}

Expr bind(const Expr &e, const std::map<std::string, Rational> &bindings) {
  if (e.kind == Expr::Kind::parameter) {
    auto it = bindings.find(e.name);
    return it == bindings.end() ? e : Expr::constant(it->second);
  }
  Expr out = e;
  for (auto &a : out.args)
    a = radsolve::bind(a, bindings);
  return out;
}

bool has_sqrt(const Expr &e) {
  return e.kind == Expr::Kind::sqrt ||
         std::any_of(e.args.begin(), e.args.end(), has_sqrt);
}

bool has_parameter(const Expr &e) {
  return e.kind == Expr::Kind::parameter ||
         std::any_of(e.args.begin(), e.args.end(), has_parameter);
}

std::set<std::string> parameter_names(const Expr &e) {
  std::set<std::string> out;
  if (e.kind == Expr::Kind::parameter)
    out.insert(e.name);
  for (const auto &a : e.args)
    out.merge(parameter_names(a));
  return out;
}

RationalFunction to_rational_function(const Expr &e) {
  switch (e.kind) {
  case Expr::Kind::constant:
    return RationalFunction::constant(e.value);
  case Expr::Kind::variable:
    return RationalFunction::x();
  case Expr::Kind::parameter:
    throw UnsupportedForm("unbound parameter '" + e.name + "'");
  case Expr::Kind::add:
    return to_rational_function(e.args[0]) + to_rational_function(e.args[1]);
  case Expr::Kind::sub:
    return to_rational_function(e.args[0]) - to_rational_function(e.args[1]);
  case Expr::Kind::neg:
    return -to_rational_function(e.args[0]);
  case Expr::Kind::mul:
    return to_rational_function(e.args[0]) * to_rational_function(e.args[1]);
  case Expr::Kind::div:
    return to_rational_function(e.args[0]) / to_rational_function(e.args[1]);
  case Expr::Kind::pow:
    return to_rational_function(e.args[0]).pow(e.exponent);
  case Expr::Kind::sqrt:
    throw UnsupportedForm("radical inside a rational expression");
  }
  throw UnsupportedForm("unknown expression node");
}

} // namespace radsolve
