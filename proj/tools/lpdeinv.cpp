#include <iostream>

#include "CLI11.hpp"
#include "lpdeinv/cli.hpp"

int main(int argc, char** argv) {
  using lpdeinv::Command;

  CLI::App app{"Invariants, canonical forms and reducibility of second-order linear PDEs in two variables"};
  app.require_subcommand(1);

  lpdeinv::RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Seed of the identity tester")->capture_default_str();
  app.add_option("--trials", cfg.trials, "Sample points per identity test")->capture_default_str();
  app.add_option("--bound", cfg.bound, "Bound on sample-point numerators and denominators")->capture_default_str();
  app.add_flag("--json", cfg.json, "Emit the report as JSON");
  app.add_option("--frame", cfg.frame, "Frame matrix file (default identity)");

  const auto add = [&](Command c, const std::string& help) {
    CLI::App* sub = app.add_subcommand(lpdeinv::command_name(c), help);
    sub->callback([&cfg, c] { cfg.command = c; });
    return sub;
  };

  add(Command::Classify, "Stratum of an equation")->add_option("equation", cfg.inputs)->required()->expected(1);
  add(Command::Invariants, "All invariants and covariant vectors")
      ->add_option("equation", cfg.inputs)
      ->required()
      ->expected(1);
  add(Command::Transform, "Apply a transformation")
      ->add_option("files", cfg.inputs, "Equation file, then transformation file")
      ->required()
      ->expected(2);
  add(Command::Canonical, "P-map and canonical tuple")->add_option("equation", cfg.inputs)->required()->expected(1);
  CLI::App* eq = add(Command::CheckEquivalence, "Decide equivalence of two equations");
  eq->add_option("files", cfg.inputs, "Two equation files")->required()->expected(2);
  eq->add_option("--frame2", cfg.frame2, "Frame matrix of the second equation (default --frame)");
  CLI::App* red = add(Command::ReduceConst, "Reducibility to constant coefficients");
  red->add_option("equation", cfg.inputs)->required()->expected(1);
  red->add_option("--candidate", cfg.candidate, "Candidate transformation when gamma0 = 0");
  add(Command::Selftest, "Run the property suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return lpdeinv::kExitUsage;
  }
  return lpdeinv::run(cfg, std::cout, std::cerr);
}
