#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lpdeinv/equation.hpp"
#include "lpdeinv/transform.hpp"

namespace lpdeinv {

/// Sum of monomials x^i y^j with i + j <= degree, each present with
/// probability 1/2 and an integer coefficient in [-coeff, coeff].
Expr random_polynomial(std::mt19937_64& rng, int degree, int coeff = 3);

/// Random expression tree with all node kinds (sums, differences, products,
/// quotients, integer powers), of the given depth.
Expr random_expression(std::mt19937_64& rng, int depth);

/// Random coordinate change (xi, eta) = (x + p, y + q) with p, q of degree
/// <= `degree`, Jacobian taken in `base`, and a nonvanishing polynomial
/// gauge of degree <= 2. Retries until h and the determinant are nonzero.
Transformation random_admissible_transformation(std::mt19937_64& rng, const Frame& base, IdentityTester& tester,
                                                int degree = 3);

/// Random constant equation with D != 0.
Lpde random_constant_equation(std::mt19937_64& rng, IdentityTester& tester);

/// Fixed equations of each stratum used by the law checks. The seeds of
/// strata a, b and d lie in W0. The first stratum-e seed does not: its f
/// and f1 depend on x + y only, so det P1 vanishes.
std::vector<Lpde> stratum_seeds(StratumTag tag);

/// Given (A, B, C, a, b) with c^d != 0, the c that makes gamma vanish.
Expr gamma_cancelling_c(const Lpde& v, IdentityTester& tester);

/// Builds an Lpde from six expression strings.
Lpde make_lpde(const char* A, const char* B, const char* C, const char* a, const char* b, const char* c);

}  // namespace lpdeinv
