#pragma once

#include <Eigen/Core>

#include "lpdeinv/expr.hpp"
#include "lpdeinv/identity.hpp"

namespace lpdeinv {

template <typename Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;
template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using RowVector2 = Eigen::Matrix<Scalar, 1, 2>;

using ExprMatrix2 = Matrix2<Expr>;
using ExprVector2 = Vector2<Expr>;
using ExprRowVector2 = RowVector2<Expr>;
using ExprMatrix = Eigen::Matrix<Expr, Eigen::Dynamic, Eigen::Dynamic>;
using ExprVector = Eigen::Matrix<Expr, Eigen::Dynamic, 1>;

/// Builds [[a, b], [c, d]].
template <typename Scalar>
Matrix2<Scalar> matrix2(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  Matrix2<Scalar> m;
  m << a, b, c, d;
  return m;
}

template <typename Scalar>
Vector2<Scalar> vector2(const Scalar& a, const Scalar& b) {
  Vector2<Scalar> v;
  v << a, b;
  return v;
}

template <typename Derived>
typename Derived::Scalar det2(const Eigen::MatrixBase<Derived>& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

/// Adjugate of a 2x2 matrix: m * adj2(m) = det2(m) * I.
template <typename Derived>
Matrix2<typename Derived::Scalar> adj2(const Eigen::MatrixBase<Derived>& m) {
  return matrix2<typename Derived::Scalar>(m(1, 1), -m(0, 1), -m(1, 0), m(0, 0));
}

/// Componentwise zero test of any expression matrix.
template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m, IdentityTester& tester) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!tester.is_zero(m(i, j))) return false;
    }
  }
  return true;
}

template <typename DerivedA, typename DerivedB>
bool equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b, IdentityTester& tester) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (!tester.equal(a(i, j), b(i, j))) return false;
    }
  }
  return true;
}

/// Applies a scalar map to every entry.
template <typename Derived, typename F>
auto map_entries(const Eigen::MatrixBase<Derived>& m, F&& f) {
  Eigen::Matrix<Expr, Derived::RowsAtCompileTime, Derived::ColsAtCompileTime> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = f(m(i, j));
  }
  return out;
}

/// Gaussian elimination over the expression field. The pivot of each column
/// is the first remaining row whose entry is not identically zero under the
/// tester. Throws SingularError when some column has no such row.
ExprVector solve_linear(const ExprMatrix& a, const ExprVector& b, IdentityTester& tester);
ExprVector solve_linear(const ExprMatrix& a, const ExprVector& b, const EqOracle& o);

/// Inverse through the adjugate. Throws SingularError if det vanishes.
ExprMatrix2 inv2(const ExprMatrix2& m, IdentityTester& tester);
ExprMatrix2 inv2(const ExprMatrix2& m, const EqOracle& o);

}  // namespace lpdeinv
