#include "lpdeinv/cli.hpp"

#include <array>
#include <ostream>
#include <unordered_map>

#include "json.hpp"
#include "lpdeinv/canonical.hpp"
#include "lpdeinv/io.hpp"
#include "lpdeinv/reduction.hpp"
#include "lpdeinv/selftest.hpp"
#include "lpdeinv/tidy.hpp"

namespace lpdeinv {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::pair<Command, const char*>, 7> kCommands = {{
    {Command::Classify, "classify"},
    {Command::Invariants, "invariants"},
    {Command::Transform, "transform"},
    {Command::Canonical, "canonical"},
    {Command::CheckEquivalence, "check-equivalence"},
    {Command::ReduceConst, "reduce-const"},
    {Command::Selftest, "selftest"},
}};

/// Bad command line. Reported with exit status kExitUsage.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Printed expressions are trees; a DAG with heavy sharing can unfold to
/// an astronomically long string. Larger expressions are summarized.
constexpr std::uint64_t kMaxPrintedNodes = 20000;

std::uint64_t tree_size(const Expr& e, std::unordered_map<const detail::Node*, std::uint64_t>& memo) {
  if (auto it = memo.find(e.id()); it != memo.end()) return it->second;
  std::uint64_t n = 1;
  for (const Expr& c : e.children()) n = std::min(kMaxPrintedNodes + 1, n + tree_size(c, memo));
  memo.emplace(e.id(), n);
  return n;
}

std::string show(const Expr& e) {
  const Expr t = tidy(e);
  std::unordered_map<const detail::Node*, std::uint64_t> memo;
  if (tree_size(t, memo) > kMaxPrintedNodes) {
    return "<expression with " + std::to_string(node_count(t)) + " shared nodes, too large to print>";
  }
  return to_pretty_string(t);
}

/// An ordered report rendered either as "key: value" / "key = expr" lines
/// or as one JSON object with the same keys.
class Report {
 public:
  void label(const std::string& key, const std::string& value) { add(key, value, false); }
  void flag(const std::string& key, bool value) { add(key, value, false); }
  void expr(const std::string& key, const Expr& e) { add(key, show(e), true); }

  template <typename Derived>
  void matrix(const std::string& key, const Eigen::MatrixBase<Derived>& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(show(m(i, j)));
      rows.push_back(std::move(row));
    }
    add(key, std::move(rows), true);
  }

  template <typename T>
  void maybe(const std::string& key, const Maybe<T>& m) {
    if (!m) {
      add(key, Json{{"absent", m.reason()}}, false);
    } else if constexpr (std::is_same_v<T, Expr>) {
      expr(key, *m);
    } else {
      matrix(key, *m);
    }
  }

  void equation(const std::string& prefix, const Lpde& v) {
    for (std::size_t i = 0; i < 6; ++i) expr(prefix + Lpde::names[i], v[i]);
  }

  void write(std::ostream& out, bool json) const {
    if (json) {
      Json obj = Json::object();
      for (const Entry& e : entries_) obj[e.key] = e.value;
      out << obj.dump(2) << '\n';
      return;
    }
    for (const Entry& e : entries_) {
      out << e.key << (e.is_expr ? " = " : ": ") << text(e.value) << '\n';
    }
  }

 private:
  struct Entry {
    std::string key;
    Json value;
    bool is_expr;
  };

  void add(const std::string& key, Json value, bool is_expr) { entries_.push_back({key, std::move(value), is_expr}); }

  static std::string text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_object() && v.contains("absent")) return "absent (" + v["absent"].get<std::string>() + ")";
    if (v.is_array()) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + text(v[i]);
      return s + "]";
    }
    return v.dump();
  }

  std::vector<Entry> entries_;
};

void expect_inputs(const RunConfig& cfg, std::size_t n, const char* usage) {
  if (cfg.inputs.size() != n) {
    throw UsageError(std::string(command_name(cfg.command)) + " expects " + usage);
  }
}

Frame load_frame(const std::optional<std::string>& path, IdentityTester& tester) {
  if (!path) return Frame::identity();
  return Frame::from_matrix(parse_frame_matrix(read_file(*path)), tester);
}

Lpde load_equation(const std::string& path) { return parse_equation(read_file(path)); }

Transformation load_transformation(const std::string& path, const Frame& base, IdentityTester& tester) {
  const TransformationSpec spec = parse_transformation(read_file(path));
  if (spec.maps) return Transformation::from_maps(spec.h, spec.maps->first, spec.maps->second, base, tester);
  return Transformation::from_matrix(spec.h, *spec.g, tester);
}

/// Prints 0 for quantities the tester finds vanishing, so that
/// classification reports agree with the decision that was taken.
void tested_expr(Report& r, const std::string& key, const Expr& e, IdentityTester& tester) {
  if (tester.is_zero(e)) {
    r.expr(key, Expr(0));
  } else {
    r.expr(key, e);
  }
}

void report_frame(Report& r, const std::string& key, const Frame& fr) {
  if (!fr.is_identity()) r.matrix(key, fr.matrix());
}

void cmd_classify(const RunConfig& cfg, Report& r, IdentityTester& tester) {
  expect_inputs(cfg, 1, "one equation file");
  Analysis an(load_equation(cfg.inputs[0]), load_frame(cfg.frame, tester), tester);
  const Stratum s = classify(an);
  if (s.tag == StratumTag::Parabolic) throw DomainError(Condition::Parabolic, "D = 0");
  r.label("stratum", stratum_name(s.tag));
  tested_expr(r, "D", an.D(), tester);
  tested_expr(r, "D0", an.D0(), tester);
  tested_expr(r, "cd", an.c_inv(), tester);
  if (s.gamma_vanishes) tested_expr(r, "gamma", an.gamma(), tester);
  if (s.chi1_vanishes) tested_expr(r, "chi1", an.chi1(), tester);
  if (s.chi2_vanishes) tested_expr(r, "chi2", an.chi2(), tester);
  if (s.gamma0_vanishes) tested_expr(r, "gamma0", an.gamma0(), tester);
}

void cmd_invariants(const RunConfig& cfg, Report& r, IdentityTester& tester) {
  expect_inputs(cfg, 1, "one equation file");
  const Lpde v = load_equation(cfg.inputs[0]);
  const Frame fr = load_frame(cfg.frame, tester);
  Analysis an(v, fr, tester);
  const Stratum s = classify(an);
  if (s.tag == StratumTag::Parabolic) throw DomainError(Condition::Parabolic, "D = 0");
  r.label("stratum", stratum_name(s.tag));
  const BaseInvariants base = base_invariants(an);
  r.expr("D", base.D);
  r.expr("ad", base.a_inv);
  r.expr("bd", base.b_inv);
  r.expr("D0", base.D0);
  r.expr("cd", base.c_inv);
  if (an.c_vanishes()) {
    const std::string reason = std::string(condition_name(Condition::CZero)) + ": c^d = 0";
    r.maybe("c1", Maybe<Expr>::absent(reason));
    r.maybe("c2", Maybe<Expr>::absent(reason));
    r.maybe("gamma", Maybe<Expr>::absent(reason));
  } else {
    const GammaInvariants g = gamma_invariants(an);
    r.expr("c1", g.c1);
    r.expr("c2", g.c2);
    r.expr("gamma", g.gamma);
  }
  r.expr("gamma0", gamma0_invariant(an).gamma0);
  const CovariantVectors cv = covariant_vectors(an);
  r.maybe("alpha_beta", cv.alpha_beta);
  r.maybe("alpha_beta0", cv.alpha_beta0);
  r.maybe("alpha_beta1", cv.alpha_beta1);
  r.maybe("alpha_beta2", cv.alpha_beta2);
  const ChiInvariants chi = chi_invariants(an);
  r.maybe("chi", chi.chi);
  r.maybe("chi1", chi.chi1);
  r.maybe("chi2", chi.chi2);
  r.maybe("chi0", chi.chi0);
  if (s.tag == StratumTag::CaseE) {
    try {
      const CaseEInvariants e = case_e_invariants(v, fr, tester);
      r.expr("f", e.f);
      r.expr("f1", e.f1);
    } catch (const DomainError& ex) {
      r.maybe("f", Maybe<Expr>::absent(ex.what()));
      r.maybe("f1", Maybe<Expr>::absent(ex.what()));
    }
  }
}

void cmd_transform(const RunConfig& cfg, Report& r, IdentityTester& tester) {
  expect_inputs(cfg, 2, "an equation file and a transformation file");
  const Lpde v = load_equation(cfg.inputs[0]);
  const Frame fr = load_frame(cfg.frame, tester);
  const Transformation t = load_transformation(cfg.inputs[1], fr, tester);
  const TransformResult res = tau(v, t, fr, tester);
  r.equation("", res.V1);
  report_frame(r, "frame", res.frame1);
}

void cmd_canonical(const RunConfig& cfg, Report& r, IdentityTester& tester) {
  expect_inputs(cfg, 1, "one equation file");
  Analysis an(load_equation(cfg.inputs[0]), load_frame(cfg.frame, tester), tester);
  const CanonicalData cd = canonical_form(an);
  r.label("stratum", stratum_name(cd.pmap.stratum.tag));
  r.expr("P0", cd.pmap.P0);
  r.matrix("P1", cd.pmap.P1);
  r.matrix("canonical_frame", cd.canonical_frame.matrix());
  r.equation("canonical_", cd.canonical_tuple);
}

void cmd_check_equivalence(const RunConfig& cfg, Report& r, IdentityTester& tester) {
  expect_inputs(cfg, 2, "two equation files");
  const Lpde u = load_equation(cfg.inputs[0]);
  const Lpde v = load_equation(cfg.inputs[1]);
  const Frame fr_u = load_frame(cfg.frame, tester);
  const Frame fr_v = load_frame(cfg.frame2 ? cfg.frame2 : cfg.frame, tester);
  const EquivalenceReport rep = check_equivalence(u, fr_u, v, fr_v, tester);
  r.label("stratum_u", stratum_name(rep.stratum_u));
  r.label("stratum_v", stratum_name(rep.stratum_v));
  r.flag("same_stratum", rep.same_stratum);
  r.flag("frame_condition", rep.frame_condition);
  r.flag("tuple_condition", rep.tuple_condition);
  r.flag("equivalent", rep.equivalent);
}

void cmd_reduce_const(const RunConfig& cfg, Report& r, IdentityTester& tester) {
  expect_inputs(cfg, 1, "one equation file");
  const Lpde v = load_equation(cfg.inputs[0]);
  const Frame fr = load_frame(cfg.frame, tester);
  Analysis an(v, fr, tester);
  if (an.D_vanishes()) throw DomainError(Condition::Parabolic, "D = 0");
  if (!an.D0_vanishes()) throw DomainError(Condition::D0Nonzero, "D0 != 0, so no reduction to constant coefficients");
  if (!an.gamma0_vanishes()) {
    const ReductionReport rep = reduce_constant(v, fr, tester);
    r.label("variant", "gamma0-nonzero");
    r.flag("reducible", rep.verdict);
    r.flag("system_satisfied", rep.system_satisfied);
    r.flag("coupling", rep.coupling);
    r.flag("integrability", rep.integrability);
    r.flag("m_conditions", rep.m_conditions);
    if (rep.system_satisfied) {
      r.matrix("N1", rep.connection.N1);
      r.matrix("N2", rep.connection.N2);
    }
  } else {
    if (!cfg.candidate) {
      throw DomainError(Condition::Gamma0Zero, "gamma0 = 0; the nonlinear case needs a candidate transformation");
    }
    const Transformation t = load_transformation(*cfg.candidate, fr, tester);
    r.label("variant", "gamma0-zero");
    r.flag("candidate_reduces", check_cor35_candidate(v, fr, t, tester));
  }
  // The canonical decider is defined only inside W0.
  try {
    r.flag("canonical_decider", constant_reducible_canonical(v, fr, tester));
  } catch (const DomainError& ex) {
    r.maybe("canonical_decider", Maybe<Expr>::absent(ex.what()));
  }
}

int cmd_selftest(const RunConfig& cfg, const EqOracle& oracle, std::ostream& out) {
  expect_inputs(cfg, 0, "no input files");
  LawConfig lc;
  lc.oracle = oracle;
  const std::vector<LawResult> results = run_selftest(lc);
  bool ok = true;
  Json laws = Json::array();
  for (const LawResult& law : results) {
    ok = ok && law.passed();
    if (cfg.json) {
      laws.push_back({{"law", law.name},
                      {"passed", law.passed()},
                      {"instances", law.instances},
                      {"failures", law.failures},
                      {"notes", law.notes}});
      continue;
    }
    out << (law.passed() ? "PASS " : "FAIL ") << law.name << " (" << law.instances - law.failures << "/"
        << law.instances << ")\n";
    for (const std::string& n : law.notes) out << "  " << n << '\n';
  }
  if (cfg.json) out << Json{{"laws", laws}, {"passed", ok}}.dump(2) << '\n';
  return ok ? kExitOk : kExitDomain;
}

}  // namespace

const char* command_name(Command c) noexcept {
  for (const auto& [cmd, name] : kCommands) {
    if (cmd == c) return name;
  }
  return "unknown";
}

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [cmd, n] : kCommands) {
    if (name == n) return cmd;
  }
  return std::nullopt;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.trials < 1) throw UsageError("--trials must be at least 1");
    if (cfg.bound < 1) throw UsageError("--bound must be at least 1");
    EqOracle oracle;
    oracle.trials = cfg.trials;
    oracle.bound = cfg.bound;
    oracle.seed = cfg.seed;
    if (cfg.command == Command::Selftest) return cmd_selftest(cfg, oracle, out);

    IdentityTester tester(oracle);
    Report report;
    switch (cfg.command) {
      case Command::Classify:
        cmd_classify(cfg, report, tester);
        break;
      case Command::Invariants:
        cmd_invariants(cfg, report, tester);
        break;
      case Command::Transform:
        cmd_transform(cfg, report, tester);
        break;
      case Command::Canonical:
        cmd_canonical(cfg, report, tester);
        break;
      case Command::CheckEquivalence:
        cmd_check_equivalence(cfg, report, tester);
        break;
      case Command::ReduceConst:
        cmd_reduce_const(cfg, report, tester);
        break;
      case Command::Selftest:
        break;
    }
    report.write(out, cfg.json);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "format: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SyntaxError& e) {
    err << "syntax: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ZeroDenominatorError& e) {
    err << "syntax: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << e.what() << '\n';
    return kExitDomain;
  } catch (const SingularError& e) {
    err << "singular: " << e.what() << '\n';
    return kExitDomain;
  } catch (const SamplingExhaustedError& e) {
    err << "sampling-exhausted: " << e.what() << '\n';
    return kExitDomain;
  } catch (const PoleError& e) {
    err << "pole: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace lpdeinv
