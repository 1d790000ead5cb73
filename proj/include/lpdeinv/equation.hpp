#pragma once

#include <array>
#include <optional>
#include <string>

#include "lpdeinv/frames.hpp"

namespace lpdeinv {

/// The equation A u_xx + B u_xy + C u_yy + a u_x + b u_y + c u = 0, stored as
/// its coefficient vector V = (A, B, C, a, b, c).
struct Lpde {
  Expr A, B, C, a, b, c;

  static constexpr std::array<const char*, 6> names = {"A", "B", "C", "a", "b", "c"};

  const Expr& operator[](std::size_t i) const;
  Expr& operator[](std::size_t i);
};

/// D = B^2 - 4AC.
Expr discriminant(const Lpde& v);

/// M = [[A, B/2], [B/2, C]], the symmetric matrix of the principal symbol.
ExprMatrix2 symbol_matrix(const Lpde& v);

/// Componentwise equality.
bool equal(const Lpde& u, const Lpde& v, IdentityTester& tester);

enum class StratumTag { CaseA, CaseB, CaseC, CaseD, CaseE, Parabolic };

const char* stratum_name(StratumTag tag) noexcept;

/// Stratum tag plus the vanishing flags that were evaluated to reach it.
/// Flags left empty were not needed by the decision.
struct Stratum {
  StratumTag tag = StratumTag::Parabolic;
  std::optional<bool> D_vanishes;
  std::optional<bool> c_vanishes;
  std::optional<bool> gamma_vanishes;
  std::optional<bool> gamma0_vanishes;
  std::optional<bool> chi1_vanishes;
  std::optional<bool> chi2_vanishes;
};

/// Decision table:
///   D == 0                               -> Parabolic
///   c^d != 0, gamma != 0                 -> CaseA
///   c^d != 0, gamma == 0, chi1 != 0      -> CaseB
///   c^d != 0, gamma == 0, chi1 == 0      -> CaseC
///   c^d == 0, gamma0 != 0                -> CaseD
///   c^d == 0, gamma0 == 0                -> CaseE
Stratum classify(const Lpde& v, const Frame& fr, IdentityTester& tester);
Stratum classify(const Lpde& v, const Frame& fr, const EqOracle& o);

}  // namespace lpdeinv
