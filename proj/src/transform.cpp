#include "lpdeinv/transform.hpp"

#include "lpdeinv/errors.hpp"

namespace lpdeinv {

namespace {

void require_nondegenerate(const Expr& h, const Expr& delta, IdentityTester& tester) {
  if (tester.is_zero(h)) throw DomainError(Condition::DegenerateTransform, "gauge h vanishes");
  if (tester.is_zero(delta)) throw DomainError(Condition::DegenerateTransform, "det g vanishes");
}

}  // namespace

Transformation Transformation::from_matrix(const Expr& h, const ExprMatrix2& g, IdentityTester& tester) {
  Transformation t{h, g, det2(g), std::nullopt};
  require_nondegenerate(t.h, t.delta, tester);
  return t;
}

Transformation Transformation::from_maps(const Expr& h, const Expr& xi, const Expr& eta, const Frame& base,
                                         IdentityTester& tester) {
  if (tester.is_zero(h)) throw DomainError(Condition::DegenerateTransform, "gauge h vanishes");
  Jacobian j = jacobian_from_maps(xi, eta, base, tester);
  return Transformation{h, std::move(j.g), std::move(j.delta), Maps{xi, eta}};
}

Transformation Transformation::identity() {
  return Transformation{Expr(1), matrix2<Expr>(1, 0, 0, 1), Expr(1), Maps{Expr::x(), Expr::y()}};
}

TransformResult tau(const Lpde& v, const Transformation& t, const Frame& fr, IdentityTester& tester,
                    MixedOrder order) {
  require_nondegenerate(t.h, t.delta, tester);
  const Expr& h = t.h;
  const ExprMatrix2& g = t.g;
  const auto d = [&](int i, const Expr& e) { return fr.delta(i, e); };

  const Expr h1 = d(0, h);
  const Expr h2 = d(1, h);

  const bool symmetric = order == MixedOrder::Symmetric;
  // p, q are the two entries of one column of g.
  const auto lower = [&](const Expr& p, const Expr& q) {
    const Expr mixed = symmetric ? (d(0, q) + d(1, p)) / 2 : d(0, q);
    return h * (v.A * d(0, p) + v.B * mixed + v.C * d(1, q) + v.a * p + v.b * q) + 2 * v.A * h1 * p +
           v.B * (h1 * q + h2 * p) + 2 * v.C * h2 * q;
  };
  const Expr mixed_h = symmetric ? (d(0, h2) + d(1, h1)) / 2 : d(0, h2);

  Lpde out;
  out.A = h * (v.A * g(0, 0) * g(0, 0) + v.B * g(0, 0) * g(1, 0) + v.C * g(1, 0) * g(1, 0));
  out.B = h * (2 * v.A * g(0, 0) * g(0, 1) + v.B * (g(0, 0) * g(1, 1) + g(0, 1) * g(1, 0)) +
               2 * v.C * g(1, 0) * g(1, 1));
  out.C = h * (v.A * g(0, 1) * g(0, 1) + v.B * g(0, 1) * g(1, 1) + v.C * g(1, 1) * g(1, 1));
  out.a = lower(g(0, 0), g(1, 0));
  out.b = lower(g(0, 1), g(1, 1));
  out.c = v.A * d(0, h1) + v.B * mixed_h + v.C * d(1, h2) + v.a * h1 + v.b * h2 + v.c * h;
  return {std::move(out), compose(fr, g, tester)};
}

TransformResult tau(const Lpde& v, const Transformation& t, const Frame& fr, const EqOracle& o,
                    MixedOrder order) {
  IdentityTester tester(o);
  return tau(v, t, fr, tester, order);
}

Transformation compose_transformations(const Transformation& t, const Transformation& t1) {
  return Transformation{t.h * t1.h, t.g * t1.g, t.delta * t1.delta, std::nullopt};
}

Lpde gauge_scale(const Lpde& v, const Expr& h, const Frame& fr, IdentityTester& tester) {
  const Transformation t{h, matrix2<Expr>(1, 0, 0, 1), Expr(1), std::nullopt};
  return tau(v, t, fr, tester).V1;
}

Lpde gauge_scale(const Lpde& v, const Expr& h, const EqOracle& o) {
  IdentityTester tester(o);
  return gauge_scale(v, h, Frame::identity(), tester);
}

}  // namespace lpdeinv
