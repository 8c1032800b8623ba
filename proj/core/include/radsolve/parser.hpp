#pragma once

#include "radsolve/expr.hpp"

#include <string_view>

namespace radsolve {

struct ParseOptions {
  /// Identifiers other than x and sqrt become parameter nodes instead of
  /// syntax errors (sweep templates).
  bool allow_parameters = false;
};

/// Parses `expr "=" expr`. Whitespace is insignificant except inside
/// literals. Throws SyntaxError carrying the byte offset of the failure and
/// the set of tokens that would have been accepted there.
EquationAst parse_equation(std::string_view text, ParseOptions options = {});

/// Parses a single expression (no "=").
Expr parse_expression(std::string_view text, ParseOptions options = {});

} // namespace radsolve
