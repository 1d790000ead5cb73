#include <random>

#include "lpdeinv/canonical.hpp"
#include "lpdeinv/errors.hpp"
#include "lpdeinv/linalg.hpp"
#include "lpdeinv/selftest.hpp"
#include "lpdeinv/transform.hpp"
#include "support.hpp"

namespace lpdeinv::test {
namespace {

const Frame kId = Frame::identity();

TEST(Tau, Examples) {
  IdentityTester t;
  const Lpde v = V("x", "y^2", "1", "x*y", "3", "1/x");
  EXPECT_TRUE(EquivLpde(tau(v, Transformation::identity(), kId, t).V1, v));

  const Transformation diag = Transformation::from_matrix(Expr(1), M2("1", "0", "0", "2"), t);
  EXPECT_TRUE(EquivLpde(tau(V("1", "0", "-1", "0", "0", "0"), diag, kId, t).V1, V("1", "0", "-4", "0", "0", "0")));

  const Transformation shear = Transformation::from_maps(Expr(1), P("x + y^2"), P("y"), kId, t);
  const TransformResult r = tau(V("1", "0", "-1", "0", "0", "1"), shear, kId, t);
  EXPECT_TRUE(EquivLpde(r.V1, V("1 - 4*y^2", "-4*y", "-1", "-2", "0", "1")));
  EXPECT_TRUE(EquivMatrix(r.frame1.matrix(), M2("1", "0", "2*y", "1")));
}

TEST(Tau, DegenerateTransformationIsRejected) {
  IdentityTester t;
  try {
    Transformation::from_matrix(P("x - x*1"), M2("1", "0", "0", "1"), t);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.condition(), Condition::DegenerateTransform);
  }
  EXPECT_THROW(Transformation::from_matrix(Expr(1), M2("x", "1", "x^2", "x"), t), DomainError);
}

TEST(Tau, FrameDeterminantBookkeeping) {
  std::mt19937_64 rng(8);
  IdentityTester t;
  const Frame base = compose(kId, random_admissible_transformation(rng, kId, t).g, t);
  const Transformation tr = random_admissible_transformation(rng, base, t);
  const TransformResult r = tau(V("1", "0", "-1", "y", "0", "1"), tr, base, t);
  EXPECT_TRUE(t.equal(r.frame1.det(), base.det() * tr.delta));
}

TEST(ComposeTransformations, Examples) {
  IdentityTester t;
  const Transformation a = Transformation::from_matrix(P("x"), M2("1", "y", "0", "1"), t);
  const Transformation left = compose_transformations(Transformation::identity(), a);
  EXPECT_TRUE(Equiv(left.h, a.h));
  EXPECT_TRUE(EquivMatrix(left.g, a.g));

  const Transformation two = Transformation::from_matrix(Expr(2), M2("1", "0", "0", "1"), t);
  const Transformation three = Transformation::from_matrix(Expr(3), M2("1", "0", "0", "1"), t);
  EXPECT_TRUE(Equiv(compose_transformations(two, three).h, "6"));

  const Transformation d2 = Transformation::from_matrix(Expr(1), M2("1", "0", "0", "2"), t);
  const Transformation d3 = Transformation::from_matrix(Expr(1), M2("1", "0", "0", "3"), t);
  const Transformation d6 = compose_transformations(d2, d3);
  EXPECT_TRUE(EquivMatrix(d6.g, M2("1", "0", "0", "6")));
  EXPECT_TRUE(Equiv(d6.delta, "6"));
}

TEST(GaugeScale, Examples) {
  const Lpde v = V("x", "y", "1", "x^2", "y^2", "x*y");
  EXPECT_TRUE(EquivLpde(gauge_scale(v, Expr(2), EqOracle{}), V("2*x", "2*y", "2", "2*x^2", "2*y^2", "2*x*y")));
  EXPECT_TRUE(EquivLpde(gauge_scale(V("1", "0", "-1", "0", "0", "0"), P("y"), EqOracle{}),
                        V("y", "0", "-y", "0", "-2", "0")));
  EXPECT_TRUE(EquivLpde(gauge_scale(v, Expr(1), EqOracle{}), v));
  EXPECT_THROW(gauge_scale(v, Expr(0), EqOracle{}), DomainError);
}

TEST(MixedOrder, ConventionsAgreeForAdmissibleMatricesInCommutingFrames) {
  std::mt19937_64 rng(4);
  IdentityTester t;
  for (int i = 0; i < 5; ++i) {
    const Lpde v = stratum_seeds(StratumTag::CaseA)[static_cast<std::size_t>(i) % 4];
    const Transformation tr = random_admissible_transformation(rng, kId, t);
    EXPECT_TRUE(EquivLpde(tau(v, tr, kId, t, MixedOrder::Symmetric).V1, tau(v, tr, kId, t, MixedOrder::Literal).V1));
  }
}

TEST(MixedOrder, ConventionsDifferForInadmissibleMatrices) {
  IdentityTester t;
  const Transformation tr = Transformation::from_matrix(Expr(1), M2("1", "0", "0", "x"), t);
  const Lpde v = V("1", "1", "-1", "0", "0", "0");
  const Lpde sym = tau(v, tr, kId, t, MixedOrder::Symmetric).V1;
  const Lpde lit = tau(v, tr, kId, t, MixedOrder::Literal).V1;
  EXPECT_TRUE(Equiv(sym.b, "1/2"));
  EXPECT_TRUE(Equiv(lit.b, "1"));
}

// The symmetric reading composes for any invertible g: applying g and then
// g^-1 restores the equation, inadmissible g included.
TEST(MixedOrder, SymmetricReadingInvertsInadmissibleMatrices) {
  IdentityTester t;
  const Lpde v = V("1", "x", "-1", "y", "0", "1");
  const Transformation tr = Transformation::from_matrix(P("1 + x^2"), M2("1", "y", "0", "x"), t);
  const TransformResult r = tau(v, tr, kId, t);
  const Transformation back = Transformation::from_matrix(1 / tr.h, inv2(tr.g, t), t);
  EXPECT_TRUE(EquivLpde(tau(r.V1, back, r.frame1, t).V1, v));
}

// Finding: with the literal mixed term, the canonical tuple of a stratum-a
// equation changes under an admissible transformation, because the P1 of
// that stratum is not admissible and the composed frame does not commute.
TEST(MixedOrder, LiteralReadingBreaksCanonicalInvarianceInStratumA) {
  IdentityTester t;
  const Lpde v = V("1", "0", "-1", "y", "0", "1");
  const Transformation tr = Transformation::from_maps(Expr(1), P("x + y^2"), P("y"), kId, t);
  const TransformResult r = tau(v, tr, kId, t);

  const auto tuple = [&](const Lpde& w, const Frame& fr, MixedOrder order) {
    Analysis an(w, fr, t);
    const PMap p = build_pmap(an);
    return tau(w, Transformation{p.P0, p.P1, det2(p.P1), std::nullopt}, fr, t, order).V1;
  };
  EXPECT_TRUE(equal(tuple(v, kId, MixedOrder::Symmetric), tuple(r.V1, r.frame1, MixedOrder::Symmetric), t));
  EXPECT_FALSE(equal(tuple(v, kId, MixedOrder::Literal), tuple(r.V1, r.frame1, MixedOrder::Literal), t));
}

LawConfig law_config() {
  LawConfig c;
  c.instances = 10;
  return c;
}

TEST(GroupoidLaws, Identity) { EXPECT_TRUE(check_identity_law(law_config()).passed()); }
TEST(GroupoidLaws, Composition) { EXPECT_TRUE(check_composition_law(law_config()).passed()); }
TEST(GroupoidLaws, QuadraticForm) { EXPECT_TRUE(check_quadratic_form_law(law_config()).passed()); }

}  // namespace
}  // namespace lpdeinv::test
