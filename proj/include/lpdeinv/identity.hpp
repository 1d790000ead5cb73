#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "lpdeinv/expr.hpp"

namespace lpdeinv {

/// Configuration of the probabilistic zero test.
///
/// An expression is declared zero when it evaluates exactly to 0 at
/// `trials` pole-free points whose coordinates are p/q with p uniform in
/// [-bound, bound] and q uniform in [1, bound]. A nonzero rational function
/// of total numerator degree d survives one trial with probability at most
/// about d / (2*bound + 1), so the false-zero probability decays
/// geometrically in `trials`.
struct EqOracle {
  int trials = 16;
  int bound = 50;
  int max_pole_retries = 64;
  std::uint64_t seed = 0;
};

/// Zero tester for one oracle configuration.
///
/// The sample points are a fixed pseudo-random sequence determined by the
/// seed, shared by every expression tested through the same instance.
/// Evaluations are memoized per point, so testing many expressions built
/// from common subexpressions costs one evaluation per shared node. Every
/// tested expression stays alive as long as the tester.
/// Not thread-safe; give each thread its own tester.
class IdentityTester {
 public:
  explicit IdentityTester(const EqOracle& oracle = {});
  ~IdentityTester();
  IdentityTester(IdentityTester&&) noexcept;
  IdentityTester& operator=(IdentityTester&&) noexcept;

  /// True iff `e` vanishes at every sampled pole-free point.
  /// Throws SamplingExhaustedError when a trial runs out of pole retries.
  bool is_zero(const Expr& e);
  bool equal(const Expr& a, const Expr& b) { return is_zero(a - b); }

  const EqOracle& oracle() const noexcept { return oracle_; }

  /// Exact value at the first pole-free sample point (used to read off
  /// constants). Throws SamplingExhaustedError if none is found.
  Rat sample_value(const Expr& e);

 private:
  struct Impl;

  EqOracle oracle_;
  std::unique_ptr<Impl> impl_;
};

/// Uniform integer in [lo, hi] by rejection sampling on raw engine output.
/// The standard distributions are implementation-defined, which would make
/// seeded sequences differ across standard libraries.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

bool eq_zero(const Expr& e, const EqOracle& o);
bool eq_expr(const Expr& a, const Expr& b, const EqOracle& o);

}  // namespace lpdeinv
