#include "lpdeinv/generators.hpp"

#include "lpdeinv/errors.hpp"
#include "lpdeinv/invariants.hpp"
#include "lpdeinv/parse.hpp"

namespace lpdeinv {

Expr random_polynomial(std::mt19937_64& rng, int degree, int coeff) {
  std::vector<Expr> terms;
  for (int total = 0; total <= degree; ++total) {
    for (int i = total; i >= 0; --i) {
      if (uniform_int(rng, 0, 1) == 0) continue;
      const std::int64_t c = uniform_int(rng, -coeff, coeff);
      if (c == 0) continue;
      terms.push_back(Expr(static_cast<int>(c)) * pow(Expr::x(), i) * pow(Expr::y(), total - i));
    }
  }
  return Expr::sum(terms);
}

Expr random_expression(std::mt19937_64& rng, int depth) {
  if (depth <= 0 || uniform_int(rng, 0, 4) == 0) {
    switch (uniform_int(rng, 0, 2)) {
      case 0:
        return Expr::x();
      case 1:
        return Expr::y();
      default: {
        const auto num = uniform_int(rng, -5, 5);
        const auto den = uniform_int(rng, 1, 3);
        Rat r(num, den);
        r.canonicalize();
        return Expr(r);
      }
    }
  }
  const Expr a = random_expression(rng, depth - 1);
  const Expr b = random_expression(rng, depth - 1);
  switch (uniform_int(rng, 0, 5)) {
    case 0:
      return a + b;
    case 1:
      return a - b;
    case 2:
      return a * b;
    case 3:
      // Keep denominators away from the literal zero constant.
      return b.is_zero() ? a / (b + Expr::x() + 1) : a / b;
    case 4: {
      auto n = uniform_int(rng, -2, 3);
      if (n == 0) n = 2;
      if (n < 0 && a.is_zero()) return a;
      return pow(a, static_cast<int>(n));
    }
    default:
      return -a;
  }
}

Transformation random_admissible_transformation(std::mt19937_64& rng, const Frame& base, IdentityTester& tester,
                                                int degree) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    const Expr h = 1 + random_polynomial(rng, 2, 2);
    const Expr xi = Expr::x() + random_polynomial(rng, degree, 2);
    const Expr eta = Expr::y() + random_polynomial(rng, degree, 2);
    if (tester.is_zero(h)) continue;
    try {
      return Transformation::from_maps(h, xi, eta, base, tester);
    } catch (const DomainError&) {
      continue;
    }
  }
  throw std::runtime_error("could not generate a nondegenerate transformation");
}

Lpde random_constant_equation(std::mt19937_64& rng, IdentityTester& tester) {
  for (;;) {
    Lpde v;
    for (std::size_t i = 0; i < 6; ++i) v[i] = Expr(static_cast<int>(uniform_int(rng, -3, 3)));
    if (!tester.is_zero(discriminant(v))) return v;
  }
}

Lpde make_lpde(const char* A, const char* B, const char* C, const char* a, const char* b, const char* c) {
  return Lpde{parse_expr(A), parse_expr(B), parse_expr(C), parse_expr(a), parse_expr(b), parse_expr(c)};
}

Expr gamma_cancelling_c(const Lpde& v, IdentityTester& tester) {
  Lpde zero_c = v;
  zero_c.c = Expr();
  Analysis an(zero_c, Frame::identity(), tester);
  // gamma is affine in c with unit slope, and c^d does not involve c.
  return -an.gamma();
}

std::vector<Lpde> stratum_seeds(StratumTag tag) {
  switch (tag) {
    case StratumTag::CaseA:
      return {
          make_lpde("1", "0", "-1", "y", "0", "1"),
          make_lpde("1", "0", "-1", "x*y", "0", "1"),
          make_lpde("y", "0", "-1", "0", "x", "1"),
          make_lpde("1", "0", "-1", "y^2", "0", "x"),
      };
    case StratumTag::CaseB:
      // c = -gamma of the same equation with c = 0 (see gamma_cancelling_c).
      return {
          make_lpde("1", "0", "-1", "y", "0", "0"),
          make_lpde("1", "0", "-1", "x*y", "0", "(x^2*y - 2)/x^2"),
          make_lpde("y", "0", "-1", "0", "x", "(2*x*y + 3)/(4*y^2)"),
          make_lpde("1", "0", "1", "x*y", "0", "(x^2*y - 2)/x^2"),
      };
    case StratumTag::CaseC:
      return {make_lpde("1", "0", "-1", "-x", "x", "0")};
    case StratumTag::CaseD:
      return {
          make_lpde("1", "0", "-1", "0", "0", "x + y^2"),
          make_lpde("1", "0", "-1", "0", "0", "x^2 + y"),
          make_lpde("1", "0", "1", "0", "0", "x*y + 1"),
          make_lpde("1", "0", "1", "y", "x", "1"),
      };
    case StratumTag::CaseE:
      return {make_lpde("0", "x + y", "0", "0", "0", "0"), make_lpde("0", "x^2 + y", "0", "0", "0", "0")};
    case StratumTag::Parabolic:
      return {make_lpde("1", "2", "1", "0", "0", "0")};
  }
  return {};
}

}  // namespace lpdeinv
