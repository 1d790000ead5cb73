#pragma once

#include <cstddef>

#include "lpdeinv/expr.hpp"

namespace lpdeinv {

struct TidyLimits {
  std::size_t max_nodes = 4000;  // larger inputs are returned unchanged
  std::size_t max_terms = 600;   // per intermediate polynomial
};

/// Rewrites `e` as (polynomial)/(polynomial) in expanded form when that
/// stays small, cancelling common monomial factors, numeric content and
/// exact polynomial quotients. Returns `e` unchanged when the expansion
/// exceeds the limits. The result is always equal to `e` as a rational
/// function; the rewrite is meant for display.
Expr tidy(const Expr& e, const TidyLimits& limits = {});

}  // namespace lpdeinv
