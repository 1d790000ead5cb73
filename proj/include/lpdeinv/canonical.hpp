#pragma once

#include <string>

#include "lpdeinv/invariants.hpp"
#include "lpdeinv/transform.hpp"

namespace lpdeinv {

/// Which second column the case-c P-map uses.
enum class CaseCColumn {
  Alpha2Beta2,  // (D D0 / chi2) (beta2, -alpha2)^t
  Alpha1Beta1,  // (D D0 / chi2) (beta1, -alpha1)^t, the literal reading; needs chi1 != 0
};

struct PMapOptions {
  CaseCColumn case_c_column = CaseCColumn::Alpha2Beta2;
};

/// The stratum-specific equivariant pair (P0, P1):
///   P0 on tau(V) = h^-1 P0 on V,  P1 on tau(V) = g^-1 P1 on V.
struct PMap {
  Expr P0;
  ExprMatrix2 P1;
  Stratum stratum;
};

/// Throws DomainError(Parabolic), DomainError(Shape) for stratum-e equations
/// not of the form (0,B,0,0,0,0), or DomainError(OutsideW0) when a required
/// quantity or det P1 vanishes.
PMap build_pmap(Analysis& an, const PMapOptions& opts = {});
PMap build_pmap(const Lpde& v, const Frame& fr, IdentityTester& tester, const PMapOptions& opts = {});
PMap build_pmap(const Lpde& v, const Frame& fr, const EqOracle& o, const PMapOptions& opts = {});

struct CanonicalData {
  PMap pmap;
  Frame canonical_frame;  // matrix fr.E * P1
  Lpde canonical_tuple;   // tau(V, (P0, P1), fr)
};

CanonicalData canonical_form(Analysis& an, const PMapOptions& opts = {});
CanonicalData canonical_form(const Lpde& v, const Frame& fr, IdentityTester& tester);
CanonicalData canonical_form(const Lpde& v, const Frame& fr, const EqOracle& o);

struct EquivalenceReport {
  bool equivalent = false;
  StratumTag stratum_u = StratumTag::Parabolic;
  StratumTag stratum_v = StratumTag::Parabolic;
  bool same_stratum = false;
  bool frame_condition = false;  // frU.E P1(U) == frV.E P1(V)
  bool tuple_condition = false;  // canonical tuples agree
};

/// Decides equivalence of two equations in W0 through their canonical
/// representatives. Different strata give a non-equivalent report rather
/// than an error.
EquivalenceReport check_equivalence(const Lpde& u, const Frame& fr_u, const Lpde& v, const Frame& fr_v,
                                    IdentityTester& tester);

/// The verdict of check_equivalence. Strata are invariant, so a stratum
/// mismatch certifies non-equivalence and yields false.
bool verify_equivalence(const Lpde& u, const Frame& fr_u, const Lpde& v, const Frame& fr_v, IdentityTester& tester);
bool verify_equivalence(const Lpde& u, const Frame& fr_u, const Lpde& v, const Frame& fr_v, const EqOracle& o);

/// True iff every component of the canonical tuple is annihilated by both
/// derivations of the canonical frame.
bool constant_reducible_canonical(const Lpde& v, const Frame& fr, IdentityTester& tester);
bool constant_reducible_canonical(const Lpde& v, const Frame& fr, const EqOracle& o);

}  // namespace lpdeinv
