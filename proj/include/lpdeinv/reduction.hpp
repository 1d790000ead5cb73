#pragma once

#include "lpdeinv/invariants.hpp"
#include "lpdeinv/transform.hpp"

namespace lpdeinv {

enum class ReductionVariant {
  Gamma0Nonzero,  // linear connection system, solved directly
  Gamma0Zero,     // nonlinear system, candidate verification only
};

/// Data of the constant-coefficient reduction problem. For Gamma0Nonzero:
///   M = [[A, B/2], [B/2, C]] / gamma0,   m = (a^d/D, b^d/D) + gamma0^-1 d gamma0.
struct ReductionData {
  ExprMatrix2 M;
  ExprVector2 m;
  ReductionVariant variant = ReductionVariant::Gamma0Nonzero;
};

/// N_i = d_i g g^{-1} for a transformation g reducing V to constant coefficients.
struct ConnectionPair {
  ExprMatrix2 N1, N2;
};

/// Throws DomainError(Parabolic), DomainError(D0Nonzero) when
/// d2(a^d/D) != d1(b^d/D), or DomainError(Gamma0Zero).
ReductionData assemble_reduction_data(Analysis& an);
ReductionData assemble_reduction_data(const Lpde& v, const Frame& fr, const EqOracle& o);

/// N^t M + M N + d M for N = [[p, q], [r, s]]; symmetric.
ExprMatrix2 connection_residual(const ExprMatrix2& M, const ExprMatrix2& N, const ExprMatrix2& dM);

/// Solves N_i^t M + M N_i + d_i M = 0 (i = 1, 2) with row 1 of N2 equal to
/// row 2 of N1: six linear equations in (n11, n12, n21, n22, m21, m22).
/// Throws SingularError when the system has no admissible pivot.
ConnectionPair solve_connection(const ReductionData& rd, const Frame& fr, IdentityTester& tester);
ConnectionPair solve_connection(const ReductionData& rd, const Frame& fr, const EqOracle& o);

/// d1 N2 + N2 N1 == d2 N1 + N1 N2 and row 1 of N2 == row 2 of N1.
bool integrability_check(const ConnectionPair& cp, const Frame& fr, IdentityTester& tester);
bool integrability_check(const ConnectionPair& cp, const Frame& fr, const EqOracle& o);

struct ReductionReport {
  bool verdict = false;
  ConnectionPair connection;
  bool system_satisfied = false;  // residuals of the connection system vanish
  bool coupling = false;          // row 1 of N2 == row 2 of N1
  bool integrability = false;     // d1 N2 + N2 N1 == d2 N1 + N1 N2
  bool m_conditions = false;      // N_i m == d_i m
};

/// Full linear reduction test. Throws as assemble_reduction_data; a
/// singular connection system yields a report with verdict false.
ReductionReport reduce_constant(const Lpde& v, const Frame& fr, IdentityTester& tester);

bool constant_reducible_cor32(const Lpde& v, const Frame& fr, IdentityTester& tester);
bool constant_reducible_cor32(const Lpde& v, const Frame& fr, const EqOracle& o);

/// Verifies a candidate g for an equation with D0 = 0 and gamma0 = 0. With
/// M = [[A, B/2], [B/2, C]], N_i = d_i g g^-1, Delta = det g and
/// m = (a^d/D, b^d/D) + Delta^-1 d Delta + D^-1 d D / 2, checks for i = 1, 2
///   N_i^t M + M N_i + d_i M - (Delta^-1 d_i Delta + D^-1 d_i D / 2) M == 0
///   N_i m == d_i m
/// Throws DomainError(Parabolic), DomainError(D0Nonzero), or
/// DomainError(Gamma0Nonzero).
bool check_cor35_candidate(const Lpde& v, const Frame& fr, const Transformation& t, IdentityTester& tester);
bool check_cor35_candidate(const Lpde& v, const Frame& fr, const Transformation& t, const EqOracle& o);

}  // namespace lpdeinv
