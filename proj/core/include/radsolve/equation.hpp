#pragma once

#include "radsolve/expr.hpp"
#include "radsolve/rational_function.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace radsolve {

/// The supported shapes, named after their canonical surface form.
enum class Form {
  roots,    // sqrt(f) = sqrt(g)
  b,        // sqrt(f) = g
  d,        // sqrt(f) + sqrt(g) = h
  e,        // sqrt(f) + sqrt(g) = sqrt(h)
  f,        // sqrt(f) - sqrt(g) = h
  hf,       // h * sqrt(f) = g
  sum_zero, // sqrt(f1) + ... + sqrt(fn) = 0
};

/// "FormRoots", "FormB", "FormD", "FormE", "FormF", "FormHF", "FormSumZero".
const char *form_name(Form form);
std::optional<Form> form_from_name(std::string_view name);

/// A radical equation in canonical form. Unused payload slots are zero.
struct RadicalEquation {
  Form form = Form::b;
  RationalFunction f;
  RationalFunction g;
  RationalFunction h;
  std::vector<RationalFunction> terms; // sum_zero only, at least two

  static RadicalEquation roots(RationalFunction f, RationalFunction g);
  static RadicalEquation form_b(RationalFunction f, RationalFunction g);
  static RadicalEquation form_d(RationalFunction f, RationalFunction g, RationalFunction h);
  static RadicalEquation form_e(RationalFunction f, RationalFunction g, RationalFunction h);
  static RadicalEquation form_f(RationalFunction f, RationalFunction g, RationalFunction h);
  static RadicalEquation form_hf(RationalFunction h, RationalFunction f, RationalFunction g);
  static RadicalEquation sum_zero(std::vector<RationalFunction> terms);

  /// Every function appearing under a square root, in surface order.
  std::vector<RationalFunction> radicands() const;
  /// Every payload function (radicands and rational terms).
  std::vector<RationalFunction> functions() const;

  friend bool operator==(const RadicalEquation &, const RadicalEquation &) = default;
};

/// Canonical surface text; parse + normalize maps it back to the same value.
std::string render(const RadicalEquation &eq);

/// Classifies and rewrites an equation into one of the canonical forms.
/// Throws UnsupportedForm for nested radicals, products or powers of
/// radicals, radicals in denominators, non-unit constant radical
/// coefficients and radical patterns of depth above two.
RadicalEquation normalize(const EquationAst &ast);

/// parse_equation followed by normalize.
RadicalEquation parse_radical_equation(std::string_view text);

} // namespace radsolve
