#pragma once

#include "lpdeinv/expr.hpp"
#include "lpdeinv/identity.hpp"
#include "lpdeinv/linalg.hpp"

namespace lpdeinv {

/// A basis of derivations delta = E^{-1} d, where d = (d/dx, d/dy)^t.
///
/// Row i of E^{-1} expresses delta^i as a combination of d/dx and d/dy.
/// Directions are indexed 0 (delta^1) and 1 (delta^2).
class Frame {
 public:
  /// delta = d.
  static Frame identity();

  /// Throws SingularError if det E vanishes under the tester.
  static Frame from_matrix(const ExprMatrix2& e, IdentityTester& tester);

  const ExprMatrix2& matrix() const noexcept { return e_; }
  const ExprMatrix2& inverse() const noexcept { return inv_; }
  const Expr& det() const noexcept { return det_; }
  bool is_identity() const noexcept { return identity_; }

  /// delta^i applied to `e`.
  Expr delta(int i, const Expr& e) const;
  /// Column (delta^1 e, delta^2 e).
  ExprVector2 gradient(const Expr& e) const;

  template <typename Derived>
  auto delta(int i, const Eigen::MatrixBase<Derived>& m) const {
    return map_entries(m, [&](const Expr& e) { return delta(i, e); });
  }

 private:
  Frame(ExprMatrix2 e, ExprMatrix2 inv, Expr det, bool identity)
      : e_(std::move(e)), inv_(std::move(inv)), det_(std::move(det)), identity_(identity) {}

  ExprMatrix2 e_;
  ExprMatrix2 inv_;
  Expr det_;
  bool identity_;

  friend Frame compose(const Frame& f, const ExprMatrix2& g, IdentityTester& tester);
};

/// delta^i e for frame `f` (directions 0 and 1).
inline Expr delta_apply(const Frame& f, int i, const Expr& e) { return f.delta(i, e); }

/// Frame with matrix E*g, i.e. delta' = g^{-1} delta.
/// Throws SingularError if det g vanishes.
Frame compose(const Frame& f, const ExprMatrix2& g, IdentityTester& tester);

/// Jacobian of the coordinate maps (xi, eta) with respect to `base`, laid out
/// as g = [[d1 xi, d1 eta], [d2 xi, d2 eta]], together with its determinant.
struct Jacobian {
  ExprMatrix2 g;
  Expr delta;
};

/// Throws DomainError(DegenerateMap) when the determinant vanishes.
Jacobian jacobian_from_maps(const Expr& xi, const Expr& eta, const Frame& base, IdentityTester& tester);
Jacobian jacobian_from_maps(const Expr& xi, const Expr& eta, const EqOracle& o);

struct AdmissibilityReport {
  /// delta^1 g^2_j == delta^2 g^1_j for j = 1, 2.
  bool symbolic_condition = false;
  /// The derivations of compose(base, g) commute on the probe functions.
  bool commutation = false;
};

/// Probe functions of the commutation test.
std::span<const Expr> commutation_probes();

/// Throws SingularError if g is singular.
AdmissibilityReport is_admissible(const ExprMatrix2& g, const Frame& base, IdentityTester& tester);

}  // namespace lpdeinv
