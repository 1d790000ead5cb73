#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpdeinv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text or input file. Carries the byte offset of the
/// offending token (or the line number for file formats).
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A literal zero appeared as a denominator or as the base of a negative power.
class ZeroDenominatorError : public Error {
 public:
  using Error::Error;
};

/// Evaluation hit a vanishing denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// The identity tester could not find pole-free sample points.
class SamplingExhaustedError : public Error {
 public:
  using Error::Error;
};

/// Matrix or linear system has no admissible pivot.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// The named mathematical condition that a domain error violates.
enum class Condition {
  Parabolic,            // D = B^2 - 4AC vanishes
  NotSecondOrder,       // A, B, C all vanish
  CZero,                // c^d vanishes where it must not
  D0Nonzero,            // necessary condition d2(a/D) = d1(b/D) fails
  D0Zero,               // D0 vanishes where it must not
  GammaZero,            // gamma vanishes where it must not
  Chi1Zero,             // chi1 vanishes where it must not
  Gamma0Zero,           // gamma0 vanishes where it must not
  Gamma0Nonzero,        // gamma0 must vanish (candidate check)
  OutsideW0,            // P-map undefined or det P1 vanishes
  DegenerateTransform,  // h or det g vanishes
  DegenerateMap,        // Jacobian of (xi, eta) vanishes
  Shape,                // equation is not of the form (0,B,0,0,0,0)
  StratumMismatch,      // equations lie in different strata
};

const char* condition_name(Condition c) noexcept;

/// An input that is well formed but outside the domain of an operation.
class DomainError : public Error {
 public:
  DomainError(Condition condition, const std::string& what)
      : Error(std::string(condition_name(condition)) + ": " + what), condition_(condition) {}

  Condition condition() const noexcept { return condition_; }

 private:
  Condition condition_;
};

}  // namespace lpdeinv
