#pragma once

#include <string_view>

#include "lpdeinv/expr.hpp"

namespace lpdeinv {

/// Parses the expression grammar (whitespace insignificant):
///
///   expr   := term (("+" | "-") term)*
///   term   := factor (("*" | "/") factor)*
///   factor := ("-")* base ("^" signed-integer)?
///   base   := integer | "x" | "y" | "(" expr ")"
///
/// Leading minus signs apply to the whole power: -x^2 is -(x^2).
/// Throws SyntaxError (with byte offset) or ZeroDenominatorError.
Expr parse_expr(std::string_view text);

}  // namespace lpdeinv
