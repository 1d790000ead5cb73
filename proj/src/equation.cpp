#include "lpdeinv/equation.hpp"

#include "lpdeinv/invariants.hpp"

namespace lpdeinv {

const Expr& Lpde::operator[](std::size_t i) const {
  switch (i) {
    case 0: return A;
    case 1: return B;
    case 2: return C;
    case 3: return a;
    case 4: return b;
    case 5: return c;
  }
  throw std::out_of_range("Lpde index");
}

Expr& Lpde::operator[](std::size_t i) {
  return const_cast<Expr&>(static_cast<const Lpde&>(*this)[i]);
}

Expr discriminant(const Lpde& v) { return v.B * v.B - 4 * v.A * v.C; }

ExprMatrix2 symbol_matrix(const Lpde& v) {
  const Expr half_b = v.B / 2;
  return matrix2(v.A, half_b, half_b, v.C);
}

bool equal(const Lpde& u, const Lpde& v, IdentityTester& tester) {
  for (std::size_t i = 0; i < 6; ++i) {
    if (!tester.equal(u[i], v[i])) return false;
  }
  return true;
}

const char* stratum_name(StratumTag tag) noexcept {
  switch (tag) {
    case StratumTag::CaseA: return "CaseA";
    case StratumTag::CaseB: return "CaseB";
    case StratumTag::CaseC: return "CaseC";
    case StratumTag::CaseD: return "CaseD";
    case StratumTag::CaseE: return "CaseE";
    case StratumTag::Parabolic: return "Parabolic";
  }
  return "unknown";
}

Stratum classify(const Lpde& v, const Frame& fr, IdentityTester& tester) {
  Analysis an(v, fr, tester);
  return classify(an);
}

Stratum classify(const Lpde& v, const Frame& fr, const EqOracle& o) {
  IdentityTester t(o);
  return classify(v, fr, t);
}

}  // namespace lpdeinv
