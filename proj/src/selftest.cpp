#include "lpdeinv/selftest.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "lpdeinv/canonical.hpp"
#include "lpdeinv/errors.hpp"
#include "lpdeinv/generators.hpp"
#include "lpdeinv/parse.hpp"
#include "lpdeinv/reduction.hpp"

namespace lpdeinv {

namespace {

constexpr std::size_t kMaxNotes = 5;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::mt19937_64 instance_rng(std::uint64_t seed, const std::string& name, int index) {
  const std::uint64_t h = fnv1a(name);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                    static_cast<std::uint32_t>(index)};
  return std::mt19937_64(seq);
}

/// A frame that is either the identity or the frame of a random coordinate change.
Frame random_frame(std::mt19937_64& rng, IdentityTester& tester) {
  if (uniform_int(rng, 0, 1) == 0) return Frame::identity();
  const Transformation t = random_admissible_transformation(rng, Frame::identity(), tester, 2);
  return compose(Frame::identity(), t.g, tester);
}

/// A random expression that has a pole-free sample point.
Expr random_regular_expression(std::mt19937_64& rng, IdentityTester& tester, int depth) {
  for (;;) {
    Expr e = random_expression(rng, depth);
    try {
      tester.sample_value(e);
      tester.is_zero(e);
      return e;
    } catch (const SamplingExhaustedError&) {
    }
  }
}

/// Collects failed sub-checks of one instance.
class Checks {
 public:
  void expect(bool ok, const char* what) {
    if (ok) return;
    if (!failed_.empty()) failed_ += ", ";
    failed_ += what;
  }
  std::string result(const std::string& context) const {
    return failed_.empty() ? std::string() : context + ": " + failed_;
  }

 private:
  std::string failed_;
};

std::string describe(const Lpde& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < 6; ++i) s += (i ? ", " : "") + to_pretty_string(v[i]);
  return s + ")";
}

std::string describe(const Transformation& t) {
  if (t.maps) {
    return "h = " + to_pretty_string(t.h) + ", xi = " + to_pretty_string(t.maps->xi) +
           ", eta = " + to_pretty_string(t.maps->eta);
  }
  return "h = " + to_pretty_string(t.h);
}

Lpde constant_with_gamma0(std::mt19937_64& rng, IdentityTester& tester, bool gamma0_zero) {
  for (;;) {
    Lpde v = random_constant_equation(rng, tester);
    Analysis an(v, Frame::identity(), tester);
    if (gamma0_zero) {
      Lpde w = v;
      w.c = Expr();
      Analysis aw(w, Frame::identity(), tester);
      w.c = Expr(-tester.sample_value(aw.gamma0()));
      return w;
    }
    if (!an.gamma0_vanishes()) return v;
  }
}

}  // namespace

LawResult run_law(const std::string& name, int count, const LawConfig& config, const LawInstance& instance) {
  LawResult result;
  result.name = name;
  result.instances = count;
  std::vector<std::string> outcomes(static_cast<std::size_t>(std::max(count, 0)));
  std::atomic<int> next{0};
  const auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      std::mt19937_64 rng = instance_rng(config.oracle.seed, name, i);
      IdentityTester tester(config.oracle);
      std::string outcome;
      try {
        outcome = instance(i, rng, tester);
      } catch (const std::exception& e) {
        outcome = std::string("exception: ") + e.what();
      }
      outcomes[static_cast<std::size_t>(i)] = std::move(outcome);
    }
  };
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(count, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  for (int i = 0; i < count; ++i) {
    const std::string& o = outcomes[static_cast<std::size_t>(i)];
    if (o.empty()) continue;
    ++result.failures;
    if (result.notes.size() < kMaxNotes) result.notes.push_back("#" + std::to_string(i) + " " + o);
  }
  return result;
}

LawResult check_mixed_partials(const LawConfig& config) {
  return run_law("mixed partial derivatives commute", config.kernel_instances, config,
                 [](int, std::mt19937_64& rng, IdentityTester& t) -> std::string {
                   const Expr e = random_regular_expression(rng, t, 4);
                   const Expr lhs = diff(diff(e, Var::X), Var::Y);
                   const Expr rhs = diff(diff(e, Var::Y), Var::X);
                   return t.equal(lhs, rhs) ? "" : "e = " + to_pretty_string(e);
                 });
}

LawResult check_leibniz(const LawConfig& config) {
  return run_law("Leibniz rule in random frames", config.kernel_instances, config,
                 [](int, std::mt19937_64& rng, IdentityTester& t) -> std::string {
                   const Frame fr = random_frame(rng, t);
                   const Expr a = random_regular_expression(rng, t, 3);
                   const Expr b = random_regular_expression(rng, t, 3);
                   for (int i = 0; i < 2; ++i) {
                     const Expr lhs = fr.delta(i, a * b);
                     const Expr rhs = fr.delta(i, a) * b + a * fr.delta(i, b);
                     if (!t.equal(lhs, rhs)) return "a = " + to_pretty_string(a) + ", b = " + to_pretty_string(b);
                   }
                   return "";
                 });
}

LawResult check_parse_roundtrip(const LawConfig& config) {
  return run_law("parse/print round trip", config.kernel_instances, config,
                 [](int, std::mt19937_64& rng, IdentityTester& t) -> std::string {
                   const Expr e = random_regular_expression(rng, t, 4);
                   const Expr p1 = parse_expr(to_string(e));
                   const Expr p2 = parse_expr(to_string(p1));
                   Checks c;
                   c.expect(tree_equal(p1, p2), "parse(print(parse)) != parse");
                   c.expect(tree_equal(p1, e), "parse(print(e)) != e");
                   c.expect(t.equal(parse_expr(to_pretty_string(e)), e), "pretty form not equivalent");
                   return c.result(to_string(e));
                 });
}

LawResult check_solve_linear(const LawConfig& config) {
  return run_law("solve_linear back-substitution", config.kernel_instances, config,
                 [](int index, std::mt19937_64& rng, IdentityTester& t) -> std::string {
                   const int n = 2 + index % 5;
                   for (;;) {
                     ExprMatrix a(n, n);
                     ExprVector b(n);
                     for (int i = 0; i < n; ++i) {
                       b(i) = random_polynomial(rng, 2);
                       for (int j = 0; j < n; ++j) a(i, j) = random_polynomial(rng, 1, 2);
                     }
                     ExprVector v;
                     try {
                       v = solve_linear(a, b, t);
                     } catch (const SingularError&) {
                       continue;
                     }
                     const ExprVector residual = a.lazyProduct(v) - b;
                     return is_zero(residual, t) ? "" : "n = " + std::to_string(n);
                   }
                 });
}

LawResult check_map_admissibility(const LawConfig& config) {
  return run_law("Jacobians of coordinate maps are admissible", config.transformations, config,
                 [](int, std::mt19937_64& rng, IdentityTester& t) -> std::string {
                   const Frame base = random_frame(rng, t);
                   const Transformation tr = random_admissible_transformation(rng, base, t);
                   const AdmissibilityReport r = is_admissible(tr.g, base, t);
                   Checks c;
                   c.expect(r.symbolic_condition, "symbolic condition");
                   c.expect(r.commutation, "commutation");
                   return c.result(describe(tr));
                 });
}

LawResult check_inadmissible_example(const LawConfig& config) {
  return run_law("g = [[1, 0], [0, x]] is not admissible", 1, config,
                 [](int, std::mt19937_64&, IdentityTester& t) -> std::string {
                   const AdmissibilityReport r =
                       is_admissible(matrix2<Expr>(1, 0, 0, Expr::x()), Frame::identity(), t);
                   Checks c;
                   c.expect(!r.symbolic_condition, "symbolic condition holds");
                   c.expect(!r.commutation, "derivations commute");
                   return c.result("g = [[1, 0], [0, x]]");
                 });
}

LawResult check_identity_law(const LawConfig& config) {
  return run_law("identity transformation acts trivially", config.instances, config,
                 [](int, std::mt19937_64& rng, IdentityTester& t) -> std::string {
                   Lpde v;
                   for (std::size_t k = 0; k < 6; ++k) v[k] = random_regular_expression(rng, t, 3);
                   const Frame fr = random_frame(rng, t);
                   const TransformResult r = tau(v, Transformation::identity(), fr, t);
                   Checks c;
                   for (std::size_t k = 0; k < 6; ++k) c.expect(tree_equal(r.V1[k], v[k]), Lpde::names[k]);
                   c.expect(equal(r.frame1.matrix(), fr.matrix(), t), "frame");
                   return c.result(describe(v));
                 });
}

LawResult check_composition_law(const LawConfig& config) {
  return run_law("composition of transformations", config.instances, config,
                 [](int index, std::mt19937_64& rng, IdentityTester& t) -> std::string {
                   static const StratumTag tags[] = {StratumTag::CaseA, StratumTag::CaseB, StratumTag::CaseD};
                   const std::vector<Lpde> seeds = stratum_seeds(tags[index % 3]);
                   const Lpde& v = seeds[static_cast<std::size_t>(index / 3) % seeds.size()];
                   const Frame fr = random_frame(rng, t);
                   const Transformation t0 = random_admissible_transformation(rng, fr, t);
                   const TransformResult r1 = tau(v, t0, fr, t);
                   const Transformation t1 = random_admissible_transformation(rng, r1.frame1, t);
                   const TransformResult r2 = tau(r1.V1, t1, r1.frame1, t);
                   const TransformResult direct = tau(v, compose_transformations(t0, t1), fr, t);
                   Checks c;
                   c.expect(equal(r2.V1, direct.V1, t), "coefficients");
                   c.expect(equal(r2.frame1.matrix(), direct.frame1.matrix(), t), "frames");
                   return c.result(describe(v) + " by " + describe(t0) + " then " + describe(t1));
                 });
}

LawResult check_quadratic_form_law(const LawConfig& config) {
  return run_law("principal symbol transforms as h g^t M g", config.instances, config,
                 [](int, std::mt19937_64& rng, IdentityTester& t) -> std::string {
                   Lpde v;
                   for (std::size_t k = 0; k < 6; ++k) v[k] = random_regular_expression(rng, t, 2);
                   const Frame fr = random_frame(rng, t);
                   const Transformation tr = random_admissible_transformation(rng, fr, t);
                   const TransformResult r = tau(v, tr, fr, t);
                   const ExprMatrix2 expected = tr.h * (tr.g.transpose() * symbol_matrix(v) * tr.g);
                   Checks c;
                   c.expect(equal(symbol_matrix(r.V1), expected, t), "symbol");
                   c.expect(t.equal(r.frame1.det(), fr.det() * tr.delta), "frame determinant");
                   return c.result(describe(v) + " by " + describe(tr));
                 });
}

LawResult check_scaling_laws(StratumTag tag, const LawConfig& config) {
  const std::vector<Lpde> seeds = stratum_seeds(tag);
  const int count = config.transformations * static_cast<int>(seeds.size());
  return run_law(std::string("relative invariance, ") + stratum_name(tag), count, config,
                 [&seeds, tag](int index, std::mt19937_64& rng, IdentityTester& t) -> std::string {
                   const Lpde& v = seeds[static_cast<std::size_t>(index) % seeds.size()];
                   const Transformation tr = random_admissible_transformation(rng, Frame::identity(), t);
                   const TransformResult r = tau(v, tr, Frame::identity(), t);
                   Analysis a0(v, Frame::identity(), t);
                   Analysis a1(r.V1, r.frame1, t);
                   const Expr& h = tr.h;
                   const Expr& delta = tr.delta;
                   const ExprMatrix2 g_inv = inv2(tr.g, t);
                   Checks c;
                   c.expect(classify(a1).tag == tag, "stratum");
                   c.expect(t.equal(a1.D(), h * h * delta * delta * a0.D()), "D");
                   c.expect(t.equal(a1.D0(), a0.D0() / delta), "D0");
                   c.expect(t.equal(a1.c_inv(), h * h * a0.c_inv()), "c");
                   if (tag == StratumTag::CaseA || tag == StratumTag::CaseB) {
                     c.expect(t.equal(a1.gamma(), h * a0.gamma()), "gamma");
                     c.expect(equal(a1.alpha_beta(), ExprVector2(g_inv * a0.alpha_beta()), t), "(alpha, beta)");
                     c.expect(t.equal(a1.chi1(), h * a0.chi1()), "chi1");
                     c.expect(t.equal(a1.chi2(), h * h * h * delta * delta * a0.chi2()), "chi2");
                     c.expect(equal(a1.alpha_beta2(), ExprRowVector2(h * a0.alpha_beta2() * tr.g), t),
                              "(alpha2, beta2)");
                   }
                   if (tag == StratumTag::CaseA) c.expect(t.equal(a1.chi(), a0.chi()), "chi");
                   if (tag == StratumTag::CaseB) {
                     c.expect(equal(a1.alpha_beta1(), ExprRowVector2(a0.alpha_beta1() * tr.g), t), "(alpha1, beta1)");
                   }
                   if (tag == StratumTag::CaseD) {
                     c.expect(t.equal(a1.gamma0(), h * a0.gamma0()), "gamma0");
                     c.expect(equal(a1.alpha_beta0(), ExprVector2(g_inv * a0.alpha_beta0()), t), "(alpha0, beta0)");
                     c.expect(t.equal(a1.chi0(), a0.chi0()), "chi0");
                   }
                   return c.result(describe(v) + " by " + describe(tr));
                 });
}

LawResult check_canonical_invariance(StratumTag tag, const LawConfig& config) {
  const std::vector<Lpde> seeds = stratum_seeds(tag);
  return run_law(std::string("canonical representative invariance, ") + stratum_name(tag), config.instances, config,
                 [&seeds](int index, std::mt19937_64& rng, IdentityTester& t) -> std::string {
                   const Lpde& v = seeds[static_cast<std::size_t>(index) % seeds.size()];
                   const Frame fr = Frame::identity();
                   const Transformation tr = random_admissible_transformation(rng, fr, t);
                   const TransformResult r = tau(v, tr, fr, t);
                   Analysis a0(v, fr, t);
                   Analysis a1(r.V1, r.frame1, t);
                   const CanonicalData c0 = canonical_form(a0);
                   const CanonicalData c1 = canonical_form(a1);
                   Checks c;
                   c.expect(t.equal(c1.pmap.P0, c0.pmap.P0 / tr.h), "P0 equivariance");
                   c.expect(equal(c1.pmap.P1, ExprMatrix2(inv2(tr.g, t) * c0.pmap.P1), t), "P1 equivariance");
                   c.expect(equal(c1.canonical_frame.matrix(), c0.canonical_frame.matrix(), t), "frame condition");
                   c.expect(equal(c1.canonical_tuple, c0.canonical_tuple, t), "canonical tuple");
                   c.expect(verify_equivalence(v, fr, r.V1, r.frame1, t), "verify_equivalence");
                   return c.result(describe(v) + " by " + describe(tr));
                 });
}

LawResult check_cross_stratum(const LawConfig& config) {
  static const StratumTag tags[] = {StratumTag::CaseA, StratumTag::CaseB, StratumTag::CaseD};
  return run_law("equations of different strata are not equivalent", config.instances, config,
                 [](int index, std::mt19937_64& rng, IdentityTester& t) -> std::string {
                   const StratumTag first = tags[index % 3];
                   const StratumTag second = tags[(index + 1 + index / 3 % 2) % 3];
                   const std::vector<Lpde> s1 = stratum_seeds(first);
                   const std::vector<Lpde> s2 = stratum_seeds(second);
                   const Lpde& u = s1[static_cast<std::size_t>(index) % s1.size()];
                   const Lpde& w = s2[static_cast<std::size_t>(index) % s2.size()];
                   const Transformation tr = random_admissible_transformation(rng, Frame::identity(), t);
                   const TransformResult r = tau(w, tr, Frame::identity(), t);
                   const bool verdict = verify_equivalence(u, Frame::identity(), r.V1, r.frame1, t);
                   return verdict ? describe(u) + " vs transform of " + describe(w) : "";
                 });
}

LawResult check_reduction_roundtrip(const LawConfig& config) {
  return run_law("pullbacks of constant equations reduce (gamma0 != 0)", config.instances, config,
                 [](int index, std::mt19937_64& rng, IdentityTester& t) -> std::string {
                   Lpde v;
                   Frame fr = Frame::identity();
                   if (index == 0) {
                     v = make_lpde("1", "0", "-1", "0", "0", "1");
                   } else {
                     const Lpde v0 = constant_with_gamma0(rng, t, false);
                     const Transformation tr = random_admissible_transformation(rng, fr, t);
                     TransformResult r = tau(v0, tr, fr, t);
                     v = std::move(r.V1);
                     fr = std::move(r.frame1);
                   }
                   const ReductionReport rep = reduce_constant(v, fr, t);
                   Checks c;
                   c.expect(rep.system_satisfied, "connection residuals");
                   c.expect(rep.coupling, "coupling");
                   c.expect(rep.integrability, "integrability");
                   c.expect(rep.m_conditions, "m conditions");
                   c.expect(rep.verdict, "verdict");
                   return c.result(describe(v));
                 });
}

LawResult check_candidate_roundtrip(const LawConfig& config) {
  return run_law("inverse transformation passes the gamma0 = 0 candidate check", config.instances, config,
                 [](int, std::mt19937_64& rng, IdentityTester& t) -> std::string {
                   const Lpde v0 = constant_with_gamma0(rng, t, true);
                   const Transformation tr = random_admissible_transformation(rng, Frame::identity(), t);
                   const TransformResult r = tau(v0, tr, Frame::identity(), t);
                   const ExprMatrix2 g_inv = inv2(tr.g, t);
                   const Transformation candidate{1 / tr.h, g_inv, 1 / tr.delta, std::nullopt};
                   Checks c;
                   c.expect(check_cor35_candidate(r.V1, r.frame1, candidate, t), "candidate rejected");
                   c.expect(equal(tau(r.V1, candidate, r.frame1, t).V1, v0, t), "inverse does not restore");
                   return c.result(describe(v0) + " by " + describe(tr));
                 });
}

LawResult check_chi2_identity(const LawConfig& config) {
  return run_law("chi2 = det(M) chi1", config.instances, config,
                 [](int index, std::mt19937_64& rng, IdentityTester& t) -> std::string {
                   const StratumTag tag = index % 2 == 0 ? StratumTag::CaseC : StratumTag::CaseA;
                   const std::vector<Lpde> seeds = stratum_seeds(tag);
                   const Lpde& v = seeds[static_cast<std::size_t>(index / 2) % seeds.size()];
                   const Transformation tr = random_admissible_transformation(rng, Frame::identity(), t);
                   const TransformResult r = tau(v, tr, Frame::identity(), t);
                   Analysis an(r.V1, r.frame1, t);
                   Checks c;
                   c.expect(t.equal(an.chi2(), det2(symbol_matrix(r.V1)) * an.chi1()), "identity");
                   c.expect(classify(an).tag == tag, "stratum");
                   return c.result(describe(v) + " by " + describe(tr));
                 });
}

std::vector<LawResult> run_selftest(const LawConfig& config) {
  std::vector<LawResult> out;
  out.push_back(check_mixed_partials(config));
  out.push_back(check_leibniz(config));
  out.push_back(check_parse_roundtrip(config));
  out.push_back(check_solve_linear(config));
  out.push_back(check_map_admissibility(config));
  out.push_back(check_inadmissible_example(config));
  out.push_back(check_identity_law(config));
  out.push_back(check_composition_law(config));
  out.push_back(check_quadratic_form_law(config));
  for (StratumTag tag : {StratumTag::CaseA, StratumTag::CaseB, StratumTag::CaseD}) {
    out.push_back(check_scaling_laws(tag, config));
  }
  for (StratumTag tag : {StratumTag::CaseA, StratumTag::CaseB, StratumTag::CaseD}) {
    out.push_back(check_canonical_invariance(tag, config));
  }
  out.push_back(check_cross_stratum(config));
  out.push_back(check_reduction_roundtrip(config));
  out.push_back(check_candidate_roundtrip(config));
  out.push_back(check_chi2_identity(config));
  return out;
}

}  // namespace lpdeinv
