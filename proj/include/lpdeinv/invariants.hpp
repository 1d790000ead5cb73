#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "lpdeinv/equation.hpp"
#include "lpdeinv/errors.hpp"

namespace lpdeinv {

/// A value that may be unavailable because a precondition failed. The
/// reason names the violated condition.
template <typename T>
class Maybe {
 public:
  Maybe(T value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)

  static Maybe absent(std::string reason) {
    Maybe m;
    m.reason_ = std::move(reason);
    return m;
  }

  bool has_value() const noexcept { return value_.has_value(); }
  explicit operator bool() const noexcept { return has_value(); }

  const T& value() const {
    if (!value_) throw std::logic_error("value absent: " + reason_);
    return *value_;
  }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }

  const std::string& reason() const noexcept { return reason_; }

 private:
  Maybe() = default;

  std::optional<T> value_;
  std::string reason_;
};

/// Lazily computed invariants of one equation in one frame.
///
/// Every quantity is built once and shared by the quantities derived from
/// it, so the expression DAGs handed to the identity tester overlap as much
/// as possible. Accessors whose precondition fails throw DomainError naming
/// the condition; the `*_vanishes` predicates never throw a DomainError for
/// their own quantity.
class Analysis {
 public:
  Analysis(Lpde v, Frame fr, IdentityTester& tester);

  const Lpde& equation() const noexcept { return v_; }
  const Frame& frame() const noexcept { return fr_; }
  IdentityTester& tester() const noexcept { return *tester_; }

  Expr delta(int i, const Expr& e) const { return fr_.delta(i, e); }

  const Expr& D();
  bool D_vanishes();

  // Require D != 0.
  const Expr& a_inv();
  const Expr& b_inv();
  const Expr& aD();  // a^d / D
  const Expr& bD();  // b^d / D
  const Expr& D0();
  bool D0_vanishes();
  const Expr& c_inv();
  bool c_vanishes();
  const Expr& gamma0();
  bool gamma0_vanishes();

  // Require c^d != 0.
  const Expr& c1();
  const Expr& c2();
  const Expr& gamma();
  bool gamma_vanishes();

  // Require D0 != 0.
  const ExprVector2& alpha_beta();
  const ExprRowVector2& alpha_beta2();  // (alpha, beta) M
  const Expr& chi1();                   // (alpha, beta) M (alpha, beta)^t
  bool chi1_vanishes();
  const Expr& chi2();                   // (beta2, -alpha2) M (beta2, -alpha2)^t

  // Require chi1 != 0.
  const ExprRowVector2& alpha_beta1();

  // Require gamma != 0.
  const Expr& chi();

  // Require gamma0 != 0.
  const ExprVector2& alpha_beta0();
  const Expr& chi0();

  /// Quadratic form of the symbol: A p^2 + B p q + C q^2.
  Expr symbol_form(const Expr& p, const Expr& q) const;

 private:
  void require_nonparabolic();
  void require_c_nonzero();

  Lpde v_;
  Frame fr_;
  IdentityTester* tester_;

  std::optional<Expr> D_, a_inv_, b_inv_, aD_, bD_, D0_, c_inv_, gamma0_;
  std::optional<Expr> c1_, c2_, gamma_, chi1_, chi2_, chi_, chi0_;
  std::optional<ExprVector2> alpha_beta_, alpha_beta0_;
  std::optional<ExprRowVector2> alpha_beta1_, alpha_beta2_;
  std::optional<bool> D_zero_, D0_zero_, c_zero_, gamma0_zero_, gamma_zero_, chi1_zero_;
};

struct BaseInvariants {
  Expr D, a_inv, b_inv, D0, c_inv;
};

struct GammaInvariants {
  Expr c1, c2, gamma;
};

struct Gamma0Invariant {
  Expr gamma0;
};

struct CovariantVectors {
  Maybe<ExprVector2> alpha_beta = Maybe<ExprVector2>::absent("not computed");
  Maybe<ExprVector2> alpha_beta0 = Maybe<ExprVector2>::absent("not computed");
  Maybe<ExprRowVector2> alpha_beta1 = Maybe<ExprRowVector2>::absent("not computed");
  Maybe<ExprRowVector2> alpha_beta2 = Maybe<ExprRowVector2>::absent("not computed");
};

struct ChiInvariants {
  Maybe<Expr> chi = Maybe<Expr>::absent("not computed");
  Maybe<Expr> chi1 = Maybe<Expr>::absent("not computed");
  Maybe<Expr> chi2 = Maybe<Expr>::absent("not computed");
  Maybe<Expr> chi0 = Maybe<Expr>::absent("not computed");
};

/// f = B^-2 d2(d1 B / B) and f1 = B d1 f d2 f, for equations (0, B, 0, 0, 0, 0).
struct CaseEInvariants {
  Expr f, f1;
};

/// Throws DomainError(Parabolic) when D vanishes.
BaseInvariants base_invariants(Analysis& an);
/// Throws DomainError(Parabolic) or DomainError(CZero).
GammaInvariants gamma_invariants(Analysis& an);
/// Throws DomainError(Parabolic).
Gamma0Invariant gamma0_invariant(Analysis& an);
/// Unavailable vectors are reported as absences. Throws DomainError(Parabolic).
CovariantVectors covariant_vectors(Analysis& an);
/// Unavailable values are reported as absences. Throws DomainError(Parabolic).
ChiInvariants chi_invariants(Analysis& an);
/// Throws DomainError(Shape) unless V = (0, B, 0, 0, 0, 0) with B != 0.
CaseEInvariants case_e_invariants(const Lpde& v, const Frame& fr, IdentityTester& tester);

BaseInvariants base_invariants(const Lpde& v, const Frame& fr, const EqOracle& o);
GammaInvariants gamma_invariants(const Lpde& v, const Frame& fr, const EqOracle& o);
Gamma0Invariant gamma0_invariant(const Lpde& v, const Frame& fr, const EqOracle& o);
CovariantVectors covariant_vectors(const Lpde& v, const Frame& fr, const EqOracle& o);
ChiInvariants chi_invariants(const Lpde& v, const Frame& fr, const EqOracle& o);
CaseEInvariants case_e_invariants(const Lpde& v, const Frame& fr, const EqOracle& o);

/// Stratum of an analysed equation; shares the analysis cache.
Stratum classify(Analysis& an);

}  // namespace lpdeinv
