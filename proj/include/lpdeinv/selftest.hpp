#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lpdeinv/equation.hpp"
#include "lpdeinv/identity.hpp"

namespace lpdeinv {

/// Outcome of checking one law on a batch of random instances.
struct LawResult {
  std::string name;
  int instances = 0;
  int failures = 0;
  /// Descriptions of the first few failing instances.
  std::vector<std::string> notes;

  bool passed() const noexcept { return instances > 0 && failures == 0; }
};

struct LawConfig {
  EqOracle oracle;
  /// Random transformations per seed equation for the scaling laws.
  int transformations = 20;
  /// Instances per stratum for the equivariance and composition laws.
  int instances = 10;
  /// Randomized kernel instances (parse round trip, Leibniz rule, ...).
  int kernel_instances = 100;
  /// Worker threads; 0 means one per hardware thread.
  unsigned threads = 0;
};

/// One instance of a law. Returns an empty string on success and a
/// description of the failure otherwise. `rng` and `tester` are private to
/// the instance and seeded from the configuration and the instance index.
using LawInstance = std::function<std::string(int index, std::mt19937_64& rng, IdentityTester& tester)>;

/// Runs `count` instances, in parallel, with deterministic per-instance seeds.
LawResult run_law(const std::string& name, int count, const LawConfig& config, const LawInstance& instance);

// Exact-kernel laws.
LawResult check_mixed_partials(const LawConfig& config);
LawResult check_leibniz(const LawConfig& config);
LawResult check_parse_roundtrip(const LawConfig& config);
LawResult check_solve_linear(const LawConfig& config);

// Frames.
LawResult check_map_admissibility(const LawConfig& config);
LawResult check_inadmissible_example(const LawConfig& config);

// Transformation laws.
LawResult check_identity_law(const LawConfig& config);
LawResult check_composition_law(const LawConfig& config);
LawResult check_quadratic_form_law(const LawConfig& config);

/// Relative-invariance laws of the invariants of stratum `tag` (a, b or d)
/// under random admissible transformations of every seed.
LawResult check_scaling_laws(StratumTag tag, const LawConfig& config);

/// P-map equivariance, canonical-tuple invariance and verify_equivalence
/// on random transforms of the seeds of stratum `tag`.
LawResult check_canonical_invariance(StratumTag tag, const LawConfig& config);
LawResult check_cross_stratum(const LawConfig& config);

/// Pullbacks of constant equations with gamma0 != 0: the linear reduction
/// test, its residuals and integrability.
LawResult check_reduction_roundtrip(const LawConfig& config);
/// Pullbacks of constant equations with gamma0 = 0: the inverse
/// transformation passes the candidate check.
LawResult check_candidate_roundtrip(const LawConfig& config);
/// chi2 == det(M) chi1 on stratum-c equations and random transforms of them.
LawResult check_chi2_identity(const LawConfig& config);

/// Every law above.
std::vector<LawResult> run_selftest(const LawConfig& config);

}  // namespace lpdeinv
