#pragma once

#include <gtest/gtest.h>

#include <string>

#include "lpdeinv/equation.hpp"
#include "lpdeinv/generators.hpp"
#include "lpdeinv/identity.hpp"
#include "lpdeinv/parse.hpp"

namespace lpdeinv::test {

inline Expr P(const char* text) { return parse_expr(text); }

inline Lpde V(const char* A, const char* B, const char* C, const char* a, const char* b, const char* c) {
  return make_lpde(A, B, C, a, b, c);
}

inline ExprMatrix2 M2(const char* a, const char* b, const char* c, const char* d) {
  return matrix2(P(a), P(b), P(c), P(d));
}

inline ExprVector2 V2(const char* a, const char* b) { return vector2(P(a), P(b)); }

/// Equality under the default oracle, reporting both sides on failure.
inline ::testing::AssertionResult Equiv(const Expr& a, const Expr& b) {
  if (eq_expr(a, b, EqOracle{})) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << to_pretty_string(a) << " != " << to_pretty_string(b);
}

inline ::testing::AssertionResult Equiv(const Expr& a, const char* b) { return Equiv(a, P(b)); }

template <typename DA, typename DB>
::testing::AssertionResult EquivMatrix(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return ::testing::AssertionFailure() << "shape mismatch";
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      auto r = Equiv(a(i, j), b(i, j));
      if (!r) return r << " at (" << i << ", " << j << ")";
    }
  }
  return ::testing::AssertionSuccess();
}

inline ::testing::AssertionResult EquivLpde(const Lpde& u, const Lpde& v) {
  for (std::size_t i = 0; i < 6; ++i) {
    auto r = Equiv(u[i], v[i]);
    if (!r) return r << " in coefficient " << Lpde::names[i];
  }
  return ::testing::AssertionSuccess();
}

}  // namespace lpdeinv::test
