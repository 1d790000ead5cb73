#include <random>

#include "lpdeinv/errors.hpp"
#include "lpdeinv/linalg.hpp"
#include "lpdeinv/selftest.hpp"
#include "support.hpp"

namespace lpdeinv::test {
namespace {

TEST(JacobianFromMaps, Examples) {
  IdentityTester t;
  const Jacobian id = jacobian_from_maps(P("x"), P("y"), Frame::identity(), t);
  EXPECT_TRUE(EquivMatrix(id.g, M2("1", "0", "0", "1")));
  EXPECT_TRUE(Equiv(id.delta, "1"));

  // Layout: g11 = xi_x, g12 = eta_x, g21 = xi_y, g22 = eta_y.
  const Jacobian shear = jacobian_from_maps(P("x + y^2"), P("y"), Frame::identity(), t);
  EXPECT_TRUE(EquivMatrix(shear.g, M2("1", "0", "2*y", "1")));
  EXPECT_TRUE(Equiv(shear.delta, "1"));

  const Jacobian stretch = jacobian_from_maps(P("x"), P("2*y"), Frame::identity(), t);
  EXPECT_TRUE(EquivMatrix(stretch.g, M2("1", "0", "0", "2")));
  EXPECT_TRUE(Equiv(stretch.delta, "2"));
}

TEST(JacobianFromMaps, DegenerateMapIsRejected) {
  IdentityTester t;
  try {
    jacobian_from_maps(P("x + y"), P("2*x + 2*y"), Frame::identity(), t);
    FAIL() << "expected degenerate-map";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.condition(), Condition::DegenerateMap);
  }
}

TEST(IsAdmissible, Examples) {
  IdentityTester t;
  const Jacobian j = jacobian_from_maps(P("x^2 + y"), P("x*y - y^3"), Frame::identity(), t);
  const AdmissibilityReport maps = is_admissible(j.g, Frame::identity(), t);
  EXPECT_TRUE(maps.symbolic_condition);
  EXPECT_TRUE(maps.commutation);

  const AdmissibilityReport bad = is_admissible(M2("1", "0", "0", "x"), Frame::identity(), t);
  EXPECT_FALSE(bad.symbolic_condition);
  EXPECT_FALSE(bad.commutation);

  const AdmissibilityReport id = is_admissible(M2("1", "0", "0", "1"), Frame::identity(), t);
  EXPECT_TRUE(id.symbolic_condition);
  EXPECT_TRUE(id.commutation);
}

TEST(IsAdmissible, RelativeToComposedFrame) {
  IdentityTester t;
  const Jacobian j = jacobian_from_maps(P("x + y^2"), P("y + x^3"), Frame::identity(), t);
  const Frame base = compose(Frame::identity(), j.g, t);
  const Jacobian j1 = jacobian_from_maps(P("x*y + x"), P("y - x^2"), base, t);
  const AdmissibilityReport r = is_admissible(j1.g, base, t);
  EXPECT_TRUE(r.symbolic_condition);
  EXPECT_TRUE(r.commutation);
}

TEST(DeltaApply, Examples) {
  IdentityTester t;
  EXPECT_TRUE(Equiv(delta_apply(Frame::identity(), 0, P("x^2")), "2*x"));
  const Frame diag = Frame::from_matrix(M2("1", "0", "0", "2"), t);
  EXPECT_TRUE(Equiv(delta_apply(diag, 1, P("y")), "1/2"));
  const Frame shear = Frame::from_matrix(M2("1", "0", "2*y", "1"), t);
  EXPECT_TRUE(Equiv(delta_apply(shear, 0, P("x")), "1"));
  // Row 2 of E^-1 = (-2y, 1).
  EXPECT_TRUE(Equiv(delta_apply(shear, 1, P("x")), "-2*y"));
}

TEST(DeltaApply, IdentityFrameCoincidesWithDiff) {
  for (const char* e : {"x^3*y", "1/(x - y)", "(x + 2*y)^-2", "7"}) {
    for (int i : {0, 1}) {
      EXPECT_TRUE(Equiv(delta_apply(Frame::identity(), i, P(e)), diff(P(e), i == 0 ? Var::X : Var::Y))) << e;
    }
  }
}

TEST(FromMatrix, SingularMatrixIsRejected) {
  IdentityTester t;
  EXPECT_THROW(Frame::from_matrix(M2("x", "y", "2*x", "2*y"), t), SingularError);
}

TEST(Compose, Examples) {
  IdentityTester t;
  const ExprMatrix2 g = M2("1", "x", "0", "y");
  EXPECT_TRUE(EquivMatrix(compose(Frame::identity(), g, t).matrix(), g));
  const Frame f = Frame::from_matrix(M2("1", "0", "2*y", "1"), t);
  EXPECT_TRUE(EquivMatrix(compose(f, M2("1", "0", "0", "1"), t).matrix(), f.matrix()));
  const Frame d = Frame::from_matrix(M2("1", "0", "0", "2"), t);
  const Frame c = compose(d, M2("1", "0", "0", "3"), t);
  EXPECT_TRUE(EquivMatrix(c.matrix(), M2("1", "0", "0", "6")));
  EXPECT_TRUE(Equiv(c.det(), "6"));
}

TEST(Compose, AssociativeOnRandomMatrices) {
  std::mt19937_64 rng(3);
  IdentityTester t;
  for (int i = 0; i < 10; ++i) {
    const ExprMatrix2 a = matrix2(1 + random_polynomial(rng, 2), random_polynomial(rng, 2), random_polynomial(rng, 1),
                                  2 + random_polynomial(rng, 2));
    const ExprMatrix2 b = matrix2(Expr::x() + 3, random_polynomial(rng, 1), Expr::y(), 1 + random_polynomial(rng, 2));
    const ExprMatrix2 c = matrix2(Expr(1), Expr::y(), random_polynomial(rng, 2), 1 + Expr::x() * Expr::x());
    const Frame f = Frame::from_matrix(a, t);
    const Frame left = compose(compose(f, b, t), c, t);
    const Frame right = compose(f, ExprMatrix2(b * c), t);
    EXPECT_TRUE(EquivMatrix(left.matrix(), right.matrix()));
    EXPECT_TRUE(Equiv(left.det(), right.det()));
  }
}

TEST(FrameLaws, MapJacobiansAreAdmissible) { EXPECT_TRUE(check_map_admissibility(LawConfig{}).passed()); }
TEST(FrameLaws, DocumentedInadmissibleMatrix) { EXPECT_TRUE(check_inadmissible_example(LawConfig{}).passed()); }

}  // namespace
}  // namespace lpdeinv::test
