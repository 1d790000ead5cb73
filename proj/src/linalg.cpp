#include "lpdeinv/linalg.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "lpdeinv/errors.hpp"

namespace lpdeinv {

ExprVector solve_linear(const ExprMatrix& a, const ExprVector& b, IdentityTester& tester) {
  const Eigen::Index n = a.rows();
  if (n < 1 || a.cols() != n || b.rows() != n) {
    throw std::invalid_argument("solve_linear: expected a square system with n >= 1");
  }
  ExprMatrix m = a;
  ExprVector rhs = b;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r) {
      if (!m(r, col).is_zero() && !tester.is_zero(m(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw SingularError("singular system: no admissible pivot in column " + std::to_string(col));
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      std::swap(rhs(pivot), rhs(col));
    }
    const Expr p = m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Expr factor = m(r, col) / p;
      m(r, col) = Expr();
      for (Eigen::Index c = col + 1; c < n; ++c) {
        if (!m(col, c).is_zero()) m(r, c) = m(r, c) - factor * m(col, c);
      }
      if (!rhs(col).is_zero()) rhs(r) = rhs(r) - factor * rhs(col);
    }
  }
  ExprVector x(n);
  for (Eigen::Index r = n - 1; r >= 0; --r) {
    Expr acc = rhs(r);
    for (Eigen::Index c = r + 1; c < n; ++c) {
      if (!m(r, c).is_zero() && !x(c).is_zero()) acc = acc - m(r, c) * x(c);
    }
    x(r) = acc / m(r, r);
  }
  return x;
}

ExprVector solve_linear(const ExprMatrix& a, const ExprVector& b, const EqOracle& o) {
  IdentityTester t(o);
  return solve_linear(a, b, t);
}

ExprMatrix2 inv2(const ExprMatrix2& m, IdentityTester& tester) {
  const Expr d = det2(m);
  if (tester.is_zero(d)) throw SingularError("singular matrix: determinant vanishes");
  const ExprMatrix2 adj = adj2(m);
  return map_entries(adj, [&](const Expr& e) { return e / d; });
}

ExprMatrix2 inv2(const ExprMatrix2& m, const EqOracle& o) {
  IdentityTester t(o);
  return inv2(m, t);
}

}  // namespace lpdeinv
