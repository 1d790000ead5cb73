#include "lpdeinv/invariants.hpp"

namespace lpdeinv {

namespace {

template <typename T, typename F>
const T& memo(std::optional<T>& slot, F&& make) {
  if (!slot) slot = make();
  return *slot;
}

template <typename T, typename F>
Maybe<T> attempt(F&& make) {
  try {
    return Maybe<T>(make());
  } catch (const DomainError& e) {
    return Maybe<T>::absent(e.what());
  }
}

}  // namespace

Analysis::Analysis(Lpde v, Frame fr, IdentityTester& tester)
    : v_(std::move(v)), fr_(std::move(fr)), tester_(&tester) {}

Expr Analysis::symbol_form(const Expr& p, const Expr& q) const {
  return v_.A * p * p + v_.B * p * q + v_.C * q * q;
}

const Expr& Analysis::D() {
  return memo(D_, [&] { return discriminant(v_); });
}

bool Analysis::D_vanishes() {
  return memo(D_zero_, [&] { return tester_->is_zero(D()); });
}

void Analysis::require_nonparabolic() {
  if (D_vanishes()) throw DomainError(Condition::Parabolic, "D = 0");
}

void Analysis::require_c_nonzero() {
  if (c_vanishes()) throw DomainError(Condition::CZero, "c^d = D0^2 D vanishes");
}

const Expr& Analysis::a_inv() {
  require_nonparabolic();
  return memo(a_inv_, [&] {
    const Lpde& v = v_;
    return v.A * delta(0, v.C) - delta(0, v.A) * v.C + v.B * delta(1, v.C) - delta(1, v.B) * v.C - v.b * v.B +
           2 * v.a * v.C;
  });
}

const Expr& Analysis::b_inv() {
  require_nonparabolic();
  return memo(b_inv_, [&] {
    const Lpde& v = v_;
    return delta(0, v.A) * v.B - v.A * delta(0, v.B) + delta(1, v.A) * v.C - v.A * delta(1, v.C) - v.a * v.B +
           2 * v.b * v.A;
  });
}

const Expr& Analysis::aD() {
  return memo(aD_, [&] { return a_inv() / D(); });
}

const Expr& Analysis::bD() {
  return memo(bD_, [&] { return b_inv() / D(); });
}

const Expr& Analysis::D0() {
  return memo(D0_, [&] { return delta(1, aD()) - delta(0, bD()); });
}

bool Analysis::D0_vanishes() {
  return memo(D0_zero_, [&] { return tester_->is_zero(D0()); });
}

const Expr& Analysis::c_inv() {
  return memo(c_inv_, [&] { return D0() * D0() * D(); });
}

bool Analysis::c_vanishes() {
  // c^d = D0^2 D and D != 0.
  require_nonparabolic();
  return memo(c_zero_, [&] { return D0_vanishes(); });
}

const Expr& Analysis::gamma0() {
  return memo(gamma0_, [&] {
    const Expr& p = aD();
    const Expr& q = bD();
    return v_.A * (delta(0, p) + p * p) + v_.B * (delta(1, p) + p * q) + v_.C * (delta(1, q) + q * q) + v_.a * p +
           v_.b * q + v_.c;
  });
}

bool Analysis::gamma0_vanishes() {
  return memo(gamma0_zero_, [&] { return tester_->is_zero(gamma0()); });
}

const Expr& Analysis::c1() {
  require_c_nonzero();
  return memo(c1_, [&] { return -delta(0, c_inv()) / (2 * c_inv()); });
}

const Expr& Analysis::c2() {
  require_c_nonzero();
  return memo(c2_, [&] { return -delta(1, c_inv()) / (2 * c_inv()); });
}

const Expr& Analysis::gamma() {
  return memo(gamma_, [&] {
    const Expr& p = c1();
    const Expr& q = c2();
    return v_.A * (delta(0, p) + p * p) + v_.B * (delta(1, p) + p * q) + v_.C * (delta(1, q) + q * q) + v_.a * p +
           v_.b * q + v_.c;
  });
}

bool Analysis::gamma_vanishes() {
  return memo(gamma_zero_, [&] { return tester_->is_zero(gamma()); });
}

const ExprVector2& Analysis::alpha_beta() {
  if (D0_vanishes()) throw DomainError(Condition::D0Zero, "(alpha, beta) needs D0 != 0");
  return memo(alpha_beta_, [&] {
    const Expr& d = D();
    const Expr& d0 = D0();
    return ExprVector2(vector2(2 * aD() + delta(0, d) / d + 2 * delta(0, d0) / d0,
                               2 * bD() + delta(1, d) / d + 2 * delta(1, d0) / d0));
  });
}

const ExprRowVector2& Analysis::alpha_beta2() {
  return memo(alpha_beta2_, [&] {
    const ExprVector2& v = alpha_beta();
    const Expr half_b = v_.B / 2;
    ExprRowVector2 r;
    r << v_.A * v(0) + half_b * v(1), half_b * v(0) + v_.C * v(1);
    return r;
  });
}

const Expr& Analysis::chi1() {
  return memo(chi1_, [&] {
    const ExprVector2& v = alpha_beta();
    return symbol_form(v(0), v(1));
  });
}

bool Analysis::chi1_vanishes() {
  return memo(chi1_zero_, [&] { return tester_->is_zero(chi1()); });
}

const Expr& Analysis::chi2() {
  return memo(chi2_, [&] {
    const ExprRowVector2& w = alpha_beta2();
    return symbol_form(w(1), -w(0));
  });
}

const ExprRowVector2& Analysis::alpha_beta1() {
  if (chi1_vanishes()) throw DomainError(Condition::Chi1Zero, "(alpha1, beta1) needs chi1 != 0");
  return memo(alpha_beta1_, [&] {
    const ExprRowVector2& w = alpha_beta2();
    ExprRowVector2 r;
    r << w(0) / chi1(), w(1) / chi1();
    return r;
  });
}

const Expr& Analysis::chi() {
  if (gamma_vanishes()) throw DomainError(Condition::GammaZero, "chi needs gamma != 0");
  return memo(chi_, [&] { return chi1() / gamma(); });
}

const ExprVector2& Analysis::alpha_beta0() {
  if (gamma0_vanishes()) throw DomainError(Condition::Gamma0Zero, "(alpha0, beta0) needs gamma0 != 0");
  return memo(alpha_beta0_, [&] {
    const Expr& g0 = gamma0();
    return ExprVector2(vector2(aD() + delta(0, g0) / g0, bD() + delta(1, g0) / g0));
  });
}

const Expr& Analysis::chi0() {
  return memo(chi0_, [&] {
    const ExprVector2& v = alpha_beta0();
    return symbol_form(v(0), v(1)) / gamma0();
  });
}

BaseInvariants base_invariants(Analysis& an) {
  return {an.D(), an.a_inv(), an.b_inv(), an.D0(), an.c_inv()};
}

GammaInvariants gamma_invariants(Analysis& an) {
  return {an.c1(), an.c2(), an.gamma()};
}

Gamma0Invariant gamma0_invariant(Analysis& an) {
  return {an.gamma0()};
}

CovariantVectors covariant_vectors(Analysis& an) {
  an.D0();  // Surfaces the parabolic error.
  CovariantVectors cv;
  cv.alpha_beta = attempt<ExprVector2>([&] { return an.alpha_beta(); });
  cv.alpha_beta0 = attempt<ExprVector2>([&] { return an.alpha_beta0(); });
  cv.alpha_beta1 = attempt<ExprRowVector2>([&] { return an.alpha_beta1(); });
  cv.alpha_beta2 = attempt<ExprRowVector2>([&] { return an.alpha_beta2(); });
  return cv;
}

ChiInvariants chi_invariants(Analysis& an) {
  an.D0();
  ChiInvariants ci;
  ci.chi = attempt<Expr>([&] { return an.chi(); });
  ci.chi1 = attempt<Expr>([&] { return an.chi1(); });
  ci.chi2 = attempt<Expr>([&] { return an.chi2(); });
  ci.chi0 = attempt<Expr>([&] { return an.chi0(); });
  return ci;
}

CaseEInvariants case_e_invariants(const Lpde& v, const Frame& fr, IdentityTester& tester) {
  for (std::size_t i : {0, 2, 3, 4, 5}) {
    if (!tester.is_zero(v[i])) {
      throw DomainError(Condition::Shape, std::string("equation is not of the form (0,B,0,0,0,0): ") +
                                              Lpde::names[i] + " != 0");
    }
  }
  if (tester.is_zero(v.B)) throw DomainError(Condition::Shape, "B = 0");
  const Expr& b = v.B;
  const Expr f = fr.delta(1, fr.delta(0, b) / b) / (b * b);
  const Expr f1 = b * fr.delta(0, f) * fr.delta(1, f);
  return {f, f1};
}

BaseInvariants base_invariants(const Lpde& v, const Frame& fr, const EqOracle& o) {
  IdentityTester t(o);
  Analysis an(v, fr, t);
  return base_invariants(an);
}

GammaInvariants gamma_invariants(const Lpde& v, const Frame& fr, const EqOracle& o) {
  IdentityTester t(o);
  Analysis an(v, fr, t);
  return gamma_invariants(an);
}

Gamma0Invariant gamma0_invariant(const Lpde& v, const Frame& fr, const EqOracle& o) {
  IdentityTester t(o);
  Analysis an(v, fr, t);
  return gamma0_invariant(an);
}

CovariantVectors covariant_vectors(const Lpde& v, const Frame& fr, const EqOracle& o) {
  IdentityTester t(o);
  Analysis an(v, fr, t);
  return covariant_vectors(an);
}

ChiInvariants chi_invariants(const Lpde& v, const Frame& fr, const EqOracle& o) {
  IdentityTester t(o);
  Analysis an(v, fr, t);
  return chi_invariants(an);
}

CaseEInvariants case_e_invariants(const Lpde& v, const Frame& fr, const EqOracle& o) {
  IdentityTester t(o);
  return case_e_invariants(v, fr, t);
}

Stratum classify(Analysis& an) {
  Stratum s;
  s.D_vanishes = an.D_vanishes();
  if (*s.D_vanishes) {
    s.tag = StratumTag::Parabolic;
    return s;
  }
  s.c_vanishes = an.c_vanishes();
  if (!*s.c_vanishes) {
    s.gamma_vanishes = an.gamma_vanishes();
    if (!*s.gamma_vanishes) {
      s.tag = StratumTag::CaseA;
      return s;
    }
    s.chi1_vanishes = an.chi1_vanishes();
    s.chi2_vanishes = an.tester().is_zero(an.chi2());
    s.tag = *s.chi1_vanishes ? StratumTag::CaseC : StratumTag::CaseB;
    return s;
  }
  s.gamma0_vanishes = an.gamma0_vanishes();
  s.tag = *s.gamma0_vanishes ? StratumTag::CaseE : StratumTag::CaseD;
  return s;
}

}  // namespace lpdeinv
