#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lpdeinv/equation.hpp"
#include "lpdeinv/errors.hpp"

namespace lpdeinv {

/// Malformed input file. Carries the 1-based line number (0 when the
/// problem is not tied to one line, e.g. a missing key).
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Six lines "A = <expr>", "B = ...", "C = ...", "a = ...", "b = ...",
/// "c = ..." in this order. Blank lines and lines starting with '#' are
/// ignored.
Lpde parse_equation(std::string_view text);

/// Keyed description of a transformation: "h = <expr>" plus either
/// "xi", "eta" or "g11", "g12", "g21", "g22", in any order.
struct TransformationSpec {
  Expr h;
  std::optional<std::pair<Expr, Expr>> maps;
  std::optional<ExprMatrix2> g;
};

TransformationSpec parse_transformation(std::string_view text);

/// Four expressions, one per line, row-major: E11, E12, E21, E22.
ExprMatrix2 parse_frame_matrix(std::string_view text);

std::string format_equation(const Lpde& v);
std::string format_frame_matrix(const ExprMatrix2& e);

/// Reads a whole file. Throws FormatError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace lpdeinv
