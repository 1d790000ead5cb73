#pragma once

#include <optional>

#include "lpdeinv/equation.hpp"

namespace lpdeinv {

/// A gauge-and-coordinate transformation (h, g): u = h v together with the
/// frame change delta' = g^{-1} delta.
struct Transformation {
  struct Maps {
    Expr xi, eta;
  };

  Expr h;
  ExprMatrix2 g;
  Expr delta;                 // det g
  std::optional<Maps> maps;   // set when g is the Jacobian of (xi, eta)

  /// Explicit matrix; g need not be admissible.
  /// Throws DomainError(DegenerateTransform) if h or det g vanishes.
  static Transformation from_matrix(const Expr& h, const ExprMatrix2& g, IdentityTester& tester);

  /// g is the Jacobian of (xi, eta) taken in `base`.
  /// Throws DomainError(DegenerateTransform) or DomainError(DegenerateMap).
  static Transformation from_maps(const Expr& h, const Expr& xi, const Expr& eta, const Frame& base,
                                  IdentityTester& tester);

  static Transformation identity();
};

struct TransformResult {
  Lpde V1;
  Frame frame1;  // compose(input frame, g)
};

/// How the mixed term B d1 d2 is read when the derivations do not commute.
enum class MixedOrder {
  /// B (d1 d2 + d2 d1) / 2. tau is then the exact rewriting of the operator
  /// L(h .) in the frame g^{-1} d, so it composes for every invertible g.
  Symmetric,
  /// B d1 d2, the formula term by term. Agrees with Symmetric whenever g
  /// is admissible and `fr` commutes; otherwise composition can fail.
  Literal,
};

/// Applies the coefficient transformation law with every derivative taken
/// in frame `fr`:
///
///   A1 = h (A g11^2 + B g11 g21 + C g21^2)
///   B1 = h (2A g11 g12 + B (g11 g22 + g12 g21) + 2C g21 g22)
///   C1 = h (A g12^2 + B g12 g22 + C g22^2)
///   a1 = h (A d1 g11 + B d1 g21 + C d2 g21 + a g11 + b g21)
///        + 2A h_1 g11 + B (h_1 g21 + h_2 g11) + 2C h_2 g21
///   b1 = the same with g12, g22 in place of g11, g21
///   c1 = A d1 d1 h + B d1 d2 h + C d2 d2 h + a h_1 + b h_2 + c h
///
/// where h_i = d_i h. Under MixedOrder::Symmetric the terms B d1 g21 and
/// B d1 d2 h become B (d1 g21 + d2 g11) / 2 and B (d1 d2 + d2 d1) h / 2.
/// Defined for any invertible g.
/// Throws DomainError(DegenerateTransform) if h or det g vanishes.
TransformResult tau(const Lpde& v, const Transformation& t, const Frame& fr, IdentityTester& tester,
                    MixedOrder order = MixedOrder::Symmetric);
TransformResult tau(const Lpde& v, const Transformation& t, const Frame& fr, const EqOracle& o,
                    MixedOrder order = MixedOrder::Symmetric);

/// (h h1, g g1). Coordinate maps are dropped: the product of Jacobians is
/// the Jacobian of a composite map, whose components are not tracked.
Transformation compose_transformations(const Transformation& t, const Transformation& t1);

/// tau with g = identity.
Lpde gauge_scale(const Lpde& v, const Expr& h, const Frame& fr, IdentityTester& tester);
Lpde gauge_scale(const Lpde& v, const Expr& h, const EqOracle& o);

}  // namespace lpdeinv
