#include "lpdeinv/reduction.hpp"

namespace lpdeinv {

namespace {

void require_necessary_condition(Analysis& an) {
  if (!an.D0_vanishes()) {
    throw DomainError(Condition::D0Nonzero, "d2(a^d/D) != d1(b^d/D), so c^d != 0");
  }
}

bool m_conditions(const ExprMatrix2& N1, const ExprMatrix2& N2, const ExprVector2& m, const Frame& fr,
                  IdentityTester& tester) {
  return equal(N1 * m, fr.delta(0, m), tester) && equal(N2 * m, fr.delta(1, m), tester);
}

}  // namespace

ReductionData assemble_reduction_data(Analysis& an) {
  require_necessary_condition(an);
  if (an.gamma0_vanishes()) throw DomainError(Condition::Gamma0Zero, "gamma0 vanishes");
  const Expr& g0 = an.gamma0();
  ReductionData rd;
  rd.M = map_entries(symbol_matrix(an.equation()), [&](const Expr& e) { return e / g0; });
  rd.m = an.alpha_beta0();
  rd.variant = ReductionVariant::Gamma0Nonzero;
  return rd;
}

ReductionData assemble_reduction_data(const Lpde& v, const Frame& fr, const EqOracle& o) {
  IdentityTester t(o);
  Analysis an(v, fr, t);
  return assemble_reduction_data(an);
}

ExprMatrix2 connection_residual(const ExprMatrix2& M, const ExprMatrix2& N, const ExprMatrix2& dM) {
  return N.transpose() * M + M * N + dM;
}

ConnectionPair solve_connection(const ReductionData& rd, const Frame& fr, IdentityTester& tester) {
  const ExprMatrix2& M = rd.M;
  ExprMatrix a = ExprMatrix::Zero(6, 6);
  ExprVector b(6);
  // Unknowns (n11, n12, n21, n22, m21, m22); N1 uses offset 0 and
  // N2 = [[n21, n22], [m21, m22]] uses offset 2.
  for (int i = 0; i < 2; ++i) {
    const int row = 3 * i;
    const int p = 2 * i, q = p + 1, r = p + 2, s = p + 3;
    const ExprMatrix2 dM = fr.delta(i, M);
    a(row, p) = 2 * M(0, 0);
    a(row, r) = 2 * M(0, 1);
    b(row) = -dM(0, 0);
    a(row + 1, p) = M(0, 1);
    a(row + 1, q) = M(0, 0);
    a(row + 1, r) = M(1, 1);
    a(row + 1, s) = M(0, 1);
    b(row + 1) = -dM(0, 1);
    a(row + 2, q) = 2 * M(0, 1);
    a(row + 2, s) = 2 * M(1, 1);
    b(row + 2) = -dM(1, 1);
  }
  const ExprVector u = solve_linear(a, b, tester);
  return ConnectionPair{matrix2(u(0), u(1), u(2), u(3)), matrix2(u(2), u(3), u(4), u(5))};
}

ConnectionPair solve_connection(const ReductionData& rd, const Frame& fr, const EqOracle& o) {
  IdentityTester t(o);
  return solve_connection(rd, fr, t);
}

bool integrability_check(const ConnectionPair& cp, const Frame& fr, IdentityTester& tester) {
  const ExprMatrix2& N1 = cp.N1;
  const ExprMatrix2& N2 = cp.N2;
  if (!equal(N2.row(0), N1.row(1), tester)) return false;
  const ExprMatrix2 lhs = fr.delta(0, N2) + N2 * N1;
  const ExprMatrix2 rhs = fr.delta(1, N1) + N1 * N2;
  return equal(lhs, rhs, tester);
}

bool integrability_check(const ConnectionPair& cp, const Frame& fr, const EqOracle& o) {
  IdentityTester t(o);
  return integrability_check(cp, fr, t);
}

ReductionReport reduce_constant(const Lpde& v, const Frame& fr, IdentityTester& tester) {
  Analysis an(v, fr, tester);
  const ReductionData rd = assemble_reduction_data(an);
  ReductionReport r;
  try {
    r.connection = solve_connection(rd, fr, tester);
  } catch (const SingularError&) {
    return r;
  }
  const ExprMatrix2& N1 = r.connection.N1;
  const ExprMatrix2& N2 = r.connection.N2;
  r.system_satisfied = is_zero(connection_residual(rd.M, N1, fr.delta(0, rd.M)), tester) &&
                       is_zero(connection_residual(rd.M, N2, fr.delta(1, rd.M)), tester);
  r.coupling = equal(N2.row(0), N1.row(1), tester);
  r.integrability = equal(ExprMatrix2(fr.delta(0, N2) + N2 * N1), ExprMatrix2(fr.delta(1, N1) + N1 * N2), tester);
  r.m_conditions = m_conditions(N1, N2, rd.m, fr, tester);
  r.verdict = r.system_satisfied && r.coupling && r.integrability && r.m_conditions;
  return r;
}

bool constant_reducible_cor32(const Lpde& v, const Frame& fr, IdentityTester& tester) {
  return reduce_constant(v, fr, tester).verdict;
}

bool constant_reducible_cor32(const Lpde& v, const Frame& fr, const EqOracle& o) {
  IdentityTester t(o);
  return constant_reducible_cor32(v, fr, t);
}

bool check_cor35_candidate(const Lpde& v, const Frame& fr, const Transformation& t, IdentityTester& tester) {
  Analysis an(v, fr, tester);
  require_necessary_condition(an);
  if (!an.gamma0_vanishes()) throw DomainError(Condition::Gamma0Nonzero, "candidate check needs gamma0 = 0");

  const ExprMatrix2 g_inv = inv2(t.g, tester);
  const Expr& delta = t.delta;
  const Expr& D = an.D();
  const ExprMatrix2 M = symbol_matrix(v);
  const ExprVector2 m = vector2(an.aD(), an.bD()) + fr.gradient(delta) / delta + fr.gradient(D) / (2 * D);

  ExprMatrix2 N[2];
  for (int i = 0; i < 2; ++i) {
    N[i] = fr.delta(i, t.g) * g_inv;
    const Expr scale = fr.delta(i, delta) / delta + fr.delta(i, D) / (2 * D);
    const ExprMatrix2 lhs = connection_residual(M, N[i], fr.delta(i, M)) - scale * M;
    if (!is_zero(lhs, tester)) return false;
  }
  return m_conditions(N[0], N[1], m, fr, tester);
}

bool check_cor35_candidate(const Lpde& v, const Frame& fr, const Transformation& t, const EqOracle& o) {
  IdentityTester tester(o);
  return check_cor35_candidate(v, fr, t, tester);
}

}  // namespace lpdeinv
