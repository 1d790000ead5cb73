#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

namespace lpdeinv {

/// Exact rational number. GMP keeps it canonical: denominator > 0 and
/// gcd(|num|, den) = 1, with zero stored as 0/1.
using Rat = mpq_class;

enum class Var : std::uint8_t { X = 0, Y = 1 };

enum class Kind : std::uint8_t { Constant, Variable, Sum, Difference, Product, Quotient, Power };

/// Evaluation site in the (x, y) plane.
struct Point {
  Rat x;
  Rat y;
};

namespace detail {
struct Node;
}

/// Immutable expression over the rationals in the two variables x and y.
///
/// Values share structure: copying an Expr copies a pointer, and every
/// derived expression (sums, derivatives, ...) reuses the nodes of its
/// operands, so the expressions built here are DAGs rather than trees.
/// Construction goes through smart constructors that fold constants, drop
/// 0/1 identities and flatten nested sums and products. Nothing is expanded
/// or distributed.
class Expr {
 public:
  Expr();
  Expr(int value);  // NOLINT(google-explicit-constructor): Eigen needs Scalar(0), Scalar(1)
  Expr(const Rat& value);  // NOLINT(google-explicit-constructor)

  static Expr constant(const Rat& value);
  static Expr variable(Var v);
  static Expr x() { return variable(Var::X); }
  static Expr y() { return variable(Var::Y); }

  static Expr sum(std::span<const Expr> terms);
  static Expr difference(const Expr& a, const Expr& b);
  static Expr product(std::span<const Expr> factors);
  static Expr quotient(const Expr& numerator, const Expr& denominator);
  static Expr power(const Expr& base, int exponent);
  static Expr negate(const Expr& e);

  Kind kind() const noexcept;
  bool is_constant() const noexcept { return kind() == Kind::Constant; }
  /// Literal zero / one constants (structural, not semantic).
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Precondition: is_constant().
  const Rat& value() const;
  /// Precondition: kind() == Kind::Variable.
  Var var() const;
  /// Precondition: kind() == Kind::Power.
  int exponent() const;
  std::span<const Expr> children() const noexcept;

  /// Node identity; stable for the lifetime of any Expr sharing the node.
  const detail::Node* id() const noexcept { return node_.get(); }

  Expr& operator+=(const Expr& rhs);
  Expr& operator-=(const Expr& rhs);
  Expr& operator*=(const Expr& rhs);
  Expr& operator/=(const Expr& rhs);

 private:
  explicit Expr(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const detail::Node> node_;

  friend Expr diff(const Expr& e, Var v);
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);

Expr pow(const Expr& base, int exponent);

/// Formal partial derivative. Results are cached on the node, so repeated
/// differentiation of shared subexpressions returns shared results.
Expr diff(const Expr& e, Var v);

/// Exact value at `p`. Throws PoleError if any denominator encountered vanishes.
Rat eval(const Expr& e, const Point& p);

/// Structural (tree) equality.
bool tree_equal(const Expr& a, const Expr& b);

/// Number of distinct nodes reachable from `e`.
std::size_t node_count(const Expr& e);

/// Fully parenthesized infix; parse(to_string(e)) is tree-equal to e for
/// every e produced by the parser or the smart constructors.
std::string to_string(const Expr& e);

/// Infix with minimal parentheses. Parses back to an equivalent expression.
std::string to_pretty_string(const Expr& e);

std::ostream& operator<<(std::ostream& os, const Expr& e);

/// Memoizing evaluator bound to one point. Shared subexpressions are
/// evaluated once. Keeps every evaluated root alive so that cached node
/// addresses cannot be reused by unrelated expressions.
class Evaluator {
 public:
  explicit Evaluator(Point p) : point_(std::move(p)) {}

  /// Value of `e`, or nullptr when `e` has a pole at the point.
  const Rat* evaluate(const Expr& e);

  const Point& point() const noexcept { return point_; }

 private:
  const Rat* evaluate_node(const detail::Node* n);

  Point point_;
  std::unordered_map<const detail::Node*, std::optional<Rat>> memo_;
  std::vector<Expr> pinned_;
};

}  // namespace lpdeinv

namespace Eigen {

template <>
struct NumTraits<lpdeinv::Expr> : GenericNumTraits<lpdeinv::Expr> {
  using Real = lpdeinv::Expr;
  using NonInteger = lpdeinv::Expr;
  using Nested = lpdeinv::Expr;
  using Literal = lpdeinv::Expr;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 4,
  };

  static inline int digits10() { return 0; }
  static inline lpdeinv::Expr epsilon() { return lpdeinv::Expr(0); }
  static inline lpdeinv::Expr dummy_precision() { return lpdeinv::Expr(0); }
  static inline lpdeinv::Expr highest() { return lpdeinv::Expr(0); }
  static inline lpdeinv::Expr lowest() { return lpdeinv::Expr(0); }
};

}  // namespace Eigen
