#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lpdeinv {

enum class Command { Classify, Invariants, Transform, Canonical, CheckEquivalence, ReduceConst, Selftest };

const char* command_name(Command c) noexcept;
std::optional<Command> parse_command(std::string_view name);

/// Inputs per command:
///   classify, invariants, canonical   one equation file
///   transform                         equation file, transformation file
///   check-equivalence                 two equation files
///   reduce-const                      equation file (plus `candidate` when gamma0 = 0)
///   selftest                          none
struct RunConfig {
  Command command = Command::Classify;
  std::vector<std::string> inputs;
  std::optional<std::string> frame;   // frame matrix of the first equation
  std::optional<std::string> frame2;  // of the second; defaults to `frame`
  std::optional<std::string> candidate;
  std::uint64_t seed = 0;
  int trials = 16;
  int bound = 50;
  bool json = false;
};

/// Exit status of run().
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitDomain = 2 };

/// Runs one command. The report goes to `out`, diagnostics to `err`.
/// Usage and input-format problems give kExitUsage; domain errors, singular
/// systems, exhausted sampling and failing self-test laws give kExitDomain.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace lpdeinv
