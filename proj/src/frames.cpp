#include "lpdeinv/frames.hpp"

#include "lpdeinv/errors.hpp"

namespace lpdeinv {

Frame Frame::identity() {
  const ExprMatrix2 id = matrix2<Expr>(1, 0, 0, 1);
  return Frame(id, id, Expr(1), true);
}

Frame Frame::from_matrix(const ExprMatrix2& e, IdentityTester& tester) {
  ExprMatrix2 inv = inv2(e, tester);
  bool identity = e(0, 0).is_one() && e(0, 1).is_zero() && e(1, 0).is_zero() && e(1, 1).is_one();
  return Frame(e, std::move(inv), det2(e), identity);
}

Expr Frame::delta(int i, const Expr& e) const {
  if (identity_) return diff(e, i == 0 ? Var::X : Var::Y);
  if (e.is_constant()) return Expr();
  return inv_(i, 0) * diff(e, Var::X) + inv_(i, 1) * diff(e, Var::Y);
}

ExprVector2 Frame::gradient(const Expr& e) const { return vector2(delta(0, e), delta(1, e)); }

Frame compose(const Frame& f, const ExprMatrix2& g, IdentityTester& tester) {
  const ExprMatrix2 g_inv = inv2(g, tester);
  if (f.is_identity()) {
    const bool identity = g(0, 0).is_one() && g(0, 1).is_zero() && g(1, 0).is_zero() && g(1, 1).is_one();
    return Frame(g, g_inv, det2(g), identity);
  }
  return Frame(f.matrix() * g, g_inv * f.inverse(), f.det() * det2(g), false);
}

Jacobian jacobian_from_maps(const Expr& xi, const Expr& eta, const Frame& base, IdentityTester& tester) {
  Jacobian j;
  j.g = matrix2(base.delta(0, xi), base.delta(0, eta), base.delta(1, xi), base.delta(1, eta));
  j.delta = det2(j.g);
  if (tester.is_zero(j.delta)) {
    throw DomainError(Condition::DegenerateMap, "Jacobian determinant xi_x*eta_y - xi_y*eta_x vanishes");
  }
  return j;
}

Jacobian jacobian_from_maps(const Expr& xi, const Expr& eta, const EqOracle& o) {
  IdentityTester t(o);
  return jacobian_from_maps(xi, eta, Frame::identity(), t);
}

std::span<const Expr> commutation_probes() {
  static const Expr probes[] = {
      pow(Expr::x(), 2),
      Expr::x() * Expr::y(),
      pow(Expr::y(), 2),
      pow(Expr::x(), 3) * Expr::y(),
  };
  return probes;
}

AdmissibilityReport is_admissible(const ExprMatrix2& g, const Frame& base, IdentityTester& tester) {
  AdmissibilityReport r;
  r.symbolic_condition = true;
  for (int j = 0; j < 2; ++j) {
    if (!tester.equal(base.delta(0, g(1, j)), base.delta(1, g(0, j)))) {
      r.symbolic_condition = false;
      break;
    }
  }
  const Frame moved = compose(base, g, tester);
  r.commutation = true;
  for (const Expr& f : commutation_probes()) {
    const Expr lhs = moved.delta(0, moved.delta(1, f));
    const Expr rhs = moved.delta(1, moved.delta(0, f));
    if (!tester.equal(lhs, rhs)) {
      r.commutation = false;
      break;
    }
  }
  return r;
}

}  // namespace lpdeinv
