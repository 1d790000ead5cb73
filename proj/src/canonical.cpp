#include "lpdeinv/canonical.hpp"

namespace lpdeinv {

namespace {

ExprMatrix2 columns(const ExprVector2& first, const ExprVector2& second) {
  return matrix2(first(0), second(0), first(1), second(1));
}

[[noreturn]] void outside_w0(const std::string& what) { throw DomainError(Condition::OutsideW0, what); }

PMap case_e_pmap(Analysis& an) {
  const Frame& fr = an.frame();
  const CaseEInvariants e = case_e_invariants(an.equation(), fr, an.tester());
  if (an.tester().is_zero(e.f)) outside_w0("f vanishes");
  if (an.tester().is_zero(e.f1)) outside_w0("f1 vanishes");
  PMap p;
  p.P0 = e.f * e.f / e.f1;
  p.P1 = columns(fr.gradient(e.f) / e.f, fr.gradient(e.f1) / e.f1);
  return p;
}

}  // namespace

PMap build_pmap(Analysis& an, const PMapOptions& opts) {
  const Stratum s = classify(an);
  const Frame& fr = an.frame();
  PMap p;
  switch (s.tag) {
    case StratumTag::Parabolic:
      throw DomainError(Condition::Parabolic, "D = 0");
    case StratumTag::CaseA:
      p.P0 = 1 / an.gamma();
      p.P1 = columns(an.alpha_beta(), fr.gradient(an.chi()));
      break;
    case StratumTag::CaseB: {
      const ExprRowVector2& w = an.alpha_beta1();
      p.P0 = 1 / an.chi1();
      p.P1 = columns(an.alpha_beta(), vector2(an.D0() * w(1), -an.D0() * w(0)));
      break;
    }
    case StratumTag::CaseC: {
      if (an.tester().is_zero(an.chi2())) outside_w0("chi2 vanishes");
      if (opts.case_c_column == CaseCColumn::Alpha1Beta1 && an.chi1_vanishes()) outside_w0("chi1 vanishes");
      const ExprRowVector2& w =
          opts.case_c_column == CaseCColumn::Alpha2Beta2 ? an.alpha_beta2() : an.alpha_beta1();
      const Expr k = an.D() * an.D0() / an.chi2();
      p.P0 = an.D() / an.chi2();
      p.P1 = columns(an.alpha_beta(), vector2(k * w(1), -k * w(0)));
      break;
    }
    case StratumTag::CaseD:
      p.P0 = 1 / an.gamma0();
      p.P1 = columns(an.alpha_beta0(), fr.gradient(an.chi0()));
      break;
    case StratumTag::CaseE:
      p = case_e_pmap(an);
      break;
  }
  p.stratum = s;
  if (an.tester().is_zero(det2(p.P1))) outside_w0("det P1 vanishes");
  return p;
}

PMap build_pmap(const Lpde& v, const Frame& fr, IdentityTester& tester, const PMapOptions& opts) {
  Analysis an(v, fr, tester);
  return build_pmap(an, opts);
}

PMap build_pmap(const Lpde& v, const Frame& fr, const EqOracle& o, const PMapOptions& opts) {
  IdentityTester t(o);
  return build_pmap(v, fr, t, opts);
}

CanonicalData canonical_form(Analysis& an, const PMapOptions& opts) {
  PMap p = build_pmap(an, opts);
  const Transformation t{p.P0, p.P1, det2(p.P1), std::nullopt};
  TransformResult r = tau(an.equation(), t, an.frame(), an.tester());
  return CanonicalData{std::move(p), std::move(r.frame1), std::move(r.V1)};
}

CanonicalData canonical_form(const Lpde& v, const Frame& fr, IdentityTester& tester) {
  Analysis an(v, fr, tester);
  return canonical_form(an);
}

CanonicalData canonical_form(const Lpde& v, const Frame& fr, const EqOracle& o) {
  IdentityTester t(o);
  return canonical_form(v, fr, t);
}

EquivalenceReport check_equivalence(const Lpde& u, const Frame& fr_u, const Lpde& v, const Frame& fr_v,
                                    IdentityTester& tester) {
  Analysis an_u(u, fr_u, tester);
  Analysis an_v(v, fr_v, tester);
  EquivalenceReport r;
  r.stratum_u = classify(an_u).tag;
  r.stratum_v = classify(an_v).tag;
  r.same_stratum = r.stratum_u == r.stratum_v;
  if (!r.same_stratum) return r;

  const CanonicalData cu = canonical_form(an_u);
  const CanonicalData cv = canonical_form(an_v);
  r.frame_condition = equal(cu.canonical_frame.matrix(), cv.canonical_frame.matrix(), tester);
  r.tuple_condition = equal(cu.canonical_tuple, cv.canonical_tuple, tester);
  r.equivalent = r.frame_condition && r.tuple_condition;
  return r;
}

bool verify_equivalence(const Lpde& u, const Frame& fr_u, const Lpde& v, const Frame& fr_v, IdentityTester& tester) {
  return check_equivalence(u, fr_u, v, fr_v, tester).equivalent;
}

bool verify_equivalence(const Lpde& u, const Frame& fr_u, const Lpde& v, const Frame& fr_v, const EqOracle& o) {
  IdentityTester t(o);
  return verify_equivalence(u, fr_u, v, fr_v, t);
}

bool constant_reducible_canonical(const Lpde& v, const Frame& fr, IdentityTester& tester) {
  const CanonicalData c = canonical_form(v, fr, tester);
  for (std::size_t k = 0; k < 6; ++k) {
    for (int i = 0; i < 2; ++i) {
      if (!tester.is_zero(c.canonical_frame.delta(i, c.canonical_tuple[k]))) return false;
    }
  }
  return true;
}

bool constant_reducible_canonical(const Lpde& v, const Frame& fr, const EqOracle& o) {
  IdentityTester t(o);
  return constant_reducible_canonical(v, fr, t);
}

}  // namespace lpdeinv
