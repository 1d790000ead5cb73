#include "lpdeinv/expr.hpp"

#include <mutex>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "lpdeinv/errors.hpp"

namespace lpdeinv {

namespace detail {

struct Node {
  Kind kind = Kind::Constant;
  Var var = Var::X;
  int exponent = 0;
  Rat value;
  std::vector<Expr> children;

  mutable std::once_flag diff_once[2];
  mutable std::shared_ptr<const Node> derivative[2];
};

}  // namespace detail

using detail::Node;

namespace {

std::shared_ptr<const Node> make_constant_node(const Rat& v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->value = v;
  return n;
}

const std::shared_ptr<const Node>& zero_node() {
  static const std::shared_ptr<const Node> n = make_constant_node(Rat(0));
  return n;
}

const std::shared_ptr<const Node>& one_node() {
  static const std::shared_ptr<const Node> n = make_constant_node(Rat(1));
  return n;
}

const std::shared_ptr<const Node>& variable_node(Var v) {
  static const std::shared_ptr<const Node> nodes[2] = {
      [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Variable;
        n->var = Var::X;
        return std::shared_ptr<const Node>(n);
      }(),
      [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Variable;
        n->var = Var::Y;
        return std::shared_ptr<const Node>(n);
      }(),
  };
  return nodes[static_cast<int>(v)];
}

std::shared_ptr<const Node> make_node(Kind kind, std::vector<Expr> children, int exponent = 0) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->children = std::move(children);
  n->exponent = exponent;
  return n;
}

Rat rat_pow(const Rat& base, unsigned long e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

// Constructors and accessors

Expr::Expr() : node_(zero_node()) {}

Expr::Expr(int value) : Expr(Rat(value)) {}

Expr::Expr(const Rat& value) {
  if (value == 0) {
    node_ = zero_node();
  } else if (value == 1) {
    node_ = one_node();
  } else {
    node_ = make_constant_node(value);
  }
}

Expr Expr::constant(const Rat& value) { return Expr(value); }

Expr Expr::variable(Var v) { return Expr(variable_node(v)); }

Kind Expr::kind() const noexcept { return node_->kind; }

bool Expr::is_zero() const noexcept { return node_->kind == Kind::Constant && node_->value == 0; }

bool Expr::is_one() const noexcept { return node_->kind == Kind::Constant && node_->value == 1; }

const Rat& Expr::value() const { return node_->value; }

Var Expr::var() const { return node_->var; }

int Expr::exponent() const { return node_->exponent; }

std::span<const Expr> Expr::children() const noexcept { return node_->children; }

// Smart constructors

Expr Expr::sum(std::span<const Expr> terms) {
  std::vector<Expr> out;
  out.reserve(terms.size());
  Rat c = 0;
  auto absorb = [&](const Expr& t) {
    if (t.is_constant()) {
      c += t.value();
    } else {
      out.push_back(t);
    }
  };
  for (const Expr& t : terms) {
    if (t.kind() == Kind::Sum) {
      for (const Expr& s : t.children()) absorb(s);
    } else {
      absorb(t);
    }
  }
  if (out.empty()) return Expr(c);
  if (c != 0) out.emplace_back(c);
  if (out.size() == 1) return out.front();
  return Expr(make_node(Kind::Sum, std::move(out)));
}

Expr Expr::difference(const Expr& a, const Expr& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return negate(b);
  if (a.is_constant() && b.is_constant()) return Expr(Rat(a.value() - b.value()));
  if (a.id() == b.id()) return Expr();
  return Expr(make_node(Kind::Difference, {a, b}));
}

Expr Expr::negate(const Expr& e) {
  if (e.is_constant()) return Expr(Rat(-e.value()));
  const Expr minus_one(-1);
  const Expr factors[] = {minus_one, e};
  return product(factors);
}

Expr Expr::product(std::span<const Expr> factors) {
  std::vector<Expr> out;
  out.reserve(factors.size() + 1);
  Rat c = 1;
  auto absorb = [&](const Expr& f) {
    if (f.is_constant()) {
      c *= f.value();
    } else {
      out.push_back(f);
    }
  };
  for (const Expr& f : factors) {
    if (f.kind() == Kind::Product) {
      for (const Expr& s : f.children()) absorb(s);
    } else {
      absorb(f);
    }
  }
  if (c == 0) return Expr();
  if (out.empty()) return Expr(c);
  if (c != 1) out.insert(out.begin(), Expr(c));
  if (out.size() == 1) return out.front();
  return Expr(make_node(Kind::Product, std::move(out)));
}

Expr Expr::quotient(const Expr& numerator, const Expr& denominator) {
  if (denominator.is_zero()) throw ZeroDenominatorError("literal zero denominator");
  if (denominator.is_one()) return numerator;
  if (numerator.is_zero()) return Expr();
  if (denominator.is_constant()) {
    if (numerator.is_constant()) return Expr(Rat(numerator.value() / denominator.value()));
    const Expr factors[] = {Expr(Rat(1 / denominator.value())), numerator};
    return product(factors);
  }
  return Expr(make_node(Kind::Quotient, {numerator, denominator}));
}

Expr Expr::power(const Expr& base, int exponent) {
  if (exponent == 0) return Expr(1);
  if (exponent == 1) return base;
  if (base.is_constant()) {
    const Rat& b = base.value();
    if (b == 0 && exponent < 0) throw ZeroDenominatorError("literal zero raised to a negative power");
    const unsigned long mag = exponent < 0 ? static_cast<unsigned long>(-static_cast<long>(exponent))
                                           : static_cast<unsigned long>(exponent);
    Rat r = rat_pow(b, mag);
    if (exponent < 0) r = 1 / r;
    return Expr(r);
  }
  return Expr(make_node(Kind::Power, {base}, exponent));
}

Expr& Expr::operator+=(const Expr& rhs) { return *this = *this + rhs; }
Expr& Expr::operator-=(const Expr& rhs) { return *this = *this - rhs; }
Expr& Expr::operator*=(const Expr& rhs) { return *this = *this * rhs; }
Expr& Expr::operator/=(const Expr& rhs) { return *this = *this / rhs; }

Expr operator+(const Expr& a, const Expr& b) {
  const Expr terms[] = {a, b};
  return Expr::sum(terms);
}

Expr operator-(const Expr& a, const Expr& b) { return Expr::difference(a, b); }

Expr operator*(const Expr& a, const Expr& b) {
  const Expr factors[] = {a, b};
  return Expr::product(factors);
}

Expr operator/(const Expr& a, const Expr& b) { return Expr::quotient(a, b); }

Expr operator-(const Expr& a) { return Expr::negate(a); }

Expr pow(const Expr& base, int exponent) { return Expr::power(base, exponent); }

// Differentiation

namespace {

Expr diff_uncached(const Expr& e, Var v) {
  switch (e.kind()) {
    case Kind::Constant:
      return Expr();
    case Kind::Variable:
      return e.var() == v ? Expr(1) : Expr();
    case Kind::Sum: {
      std::vector<Expr> terms;
      terms.reserve(e.children().size());
      for (const Expr& t : e.children()) terms.push_back(diff(t, v));
      return Expr::sum(terms);
    }
    case Kind::Difference:
      return diff(e.children()[0], v) - diff(e.children()[1], v);
    case Kind::Product: {
      const auto factors = e.children();
      std::vector<Expr> terms;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        Expr d = diff(factors[i], v);
        if (d.is_zero()) continue;
        std::vector<Expr> parts(factors.begin(), factors.end());
        parts[i] = d;
        terms.push_back(Expr::product(parts));
      }
      return Expr::sum(terms);
    }
    case Kind::Quotient: {
      const Expr& a = e.children()[0];
      const Expr& b = e.children()[1];
      const Expr da = diff(a, v);
      const Expr db = diff(b, v);
      if (db.is_zero()) return da / b;
      return (da * b - a * db) / pow(b, 2);
    }
    case Kind::Power: {
      const Expr& b = e.children()[0];
      const int n = e.exponent();
      const Expr db = diff(b, v);
      if (db.is_zero()) return Expr();
      const Expr factors[] = {Expr(n), pow(b, n - 1), db};
      return Expr::product(factors);
    }
  }
  return Expr();
}

}  // namespace

Expr diff(const Expr& e, Var v) {
  const Node* n = e.node_.get();
  const int slot = static_cast<int>(v);
  std::call_once(n->diff_once[slot], [&] { n->derivative[slot] = diff_uncached(e, v).node_; });
  return Expr(n->derivative[slot]);
}

// Evaluation

const Rat* Evaluator::evaluate(const Expr& e) {
  if (memo_.find(e.id()) == memo_.end()) pinned_.push_back(e);
  return evaluate_node(e.id());
}

const Rat* Evaluator::evaluate_node(const Node* n) {
  if (auto it = memo_.find(n); it != memo_.end()) return it->second ? &*it->second : nullptr;

  std::optional<Rat> result;
  switch (n->kind) {
    case Kind::Constant:
      result = n->value;
      break;
    case Kind::Variable:
      result = n->var == Var::X ? point_.x : point_.y;
      break;
    case Kind::Sum: {
      Rat acc = 0;
      bool ok = true;
      for (const Expr& c : n->children) {
        const Rat* v = evaluate_node(c.id());
        if (!v) {
          ok = false;
          break;
        }
        acc += *v;
      }
      if (ok) result = std::move(acc);
      break;
    }
    case Kind::Difference: {
      const Rat* a = evaluate_node(n->children[0].id());
      const Rat* b = a ? evaluate_node(n->children[1].id()) : nullptr;
      if (a && b) result = Rat(*a - *b);
      break;
    }
    case Kind::Product: {
      Rat acc = 1;
      bool ok = true;
      for (const Expr& c : n->children) {
        const Rat* v = evaluate_node(c.id());
        if (!v) {
          ok = false;
          break;
        }
        acc *= *v;
      }
      if (ok) result = std::move(acc);
      break;
    }
    case Kind::Quotient: {
      const Rat* a = evaluate_node(n->children[0].id());
      const Rat* b = a ? evaluate_node(n->children[1].id()) : nullptr;
      if (a && b && *b != 0) result = Rat(*a / *b);
      break;
    }
    case Kind::Power: {
      const Rat* b = evaluate_node(n->children[0].id());
      if (!b) break;
      const int e = n->exponent;
      if (e < 0 && *b == 0) break;
      const unsigned long mag = e < 0 ? static_cast<unsigned long>(-static_cast<long>(e))
                                      : static_cast<unsigned long>(e);
      Rat r = rat_pow(*b, mag);
      if (e < 0) r = 1 / r;
      result = std::move(r);
      break;
    }
  }
  auto [it, inserted] = memo_.emplace(n, std::move(result));
  return it->second ? &*it->second : nullptr;
}

Rat eval(const Expr& e, const Point& p) {
  Evaluator ev(p);
  const Rat* v = ev.evaluate(e);
  if (!v) {
    throw PoleError("expression has a pole at (" + p.x.get_str() + ", " + p.y.get_str() + ")");
  }
  return *v;
}

// Structure

bool tree_equal(const Expr& a, const Expr& b) {
  if (a.id() == b.id()) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::Constant:
      return a.value() == b.value();
    case Kind::Variable:
      return a.var() == b.var();
    case Kind::Power:
      if (a.exponent() != b.exponent()) return false;
      break;
    default:
      break;
  }
  const auto ca = a.children();
  const auto cb = b.children();
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (!tree_equal(ca[i], cb[i])) return false;
  }
  return true;
}

std::size_t node_count(const Expr& e) {
  std::unordered_set<const Node*> seen;
  std::vector<Expr> stack{e};
  while (!stack.empty()) {
    Expr cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur.id()).second) continue;
    for (const Expr& c : cur.children()) stack.push_back(c);
  }
  return seen.size();
}

// Printing

namespace {

void print_rat(std::ostream& os, const Rat& r, bool parenthesize) {
  const bool compound = r < 0 || r.get_den() != 1;
  if (compound && parenthesize) os << '(';
  os << r.get_num().get_str();
  if (r.get_den() != 1) os << '/' << r.get_den().get_str();
  if (compound && parenthesize) os << ')';
}

void print_full(std::ostream& os, const Expr& e) {
  switch (e.kind()) {
    case Kind::Constant:
      print_rat(os, e.value(), true);
      return;
    case Kind::Variable:
      os << (e.var() == Var::X ? 'x' : 'y');
      return;
    case Kind::Power:
      os << '(';
      print_full(os, e.children()[0]);
      os << '^' << e.exponent() << ')';
      return;
    default:
      break;
  }
  const char* sep = " + ";
  if (e.kind() == Kind::Difference) sep = " - ";
  if (e.kind() == Kind::Product) sep = " * ";
  if (e.kind() == Kind::Quotient) sep = " / ";
  os << '(';
  bool first = true;
  for (const Expr& c : e.children()) {
    if (!first) os << sep;
    first = false;
    print_full(os, c);
  }
  os << ')';
}

// Precedence levels for the pretty printer.
constexpr int kAdditive = 1;
constexpr int kMultiplicative = 2;
constexpr int kUnary = 3;
constexpr int kAtom = 4;

bool is_negative_term(const Expr& e) {
  if (e.is_constant()) return e.value() < 0;
  return e.kind() == Kind::Product && e.children()[0].is_constant() && e.children()[0].value() < 0;
}

int precedence(const Expr& e) {
  switch (e.kind()) {
    case Kind::Constant:
      if (e.value() < 0) return kUnary;
      return e.value().get_den() == 1 ? kAtom : kMultiplicative;
    case Kind::Variable:
      return kAtom;
    case Kind::Sum:
    case Kind::Difference:
      return kAdditive;
    case Kind::Product:
    case Kind::Quotient:
      return kMultiplicative;
    case Kind::Power:
      return kUnary;
  }
  return kAtom;
}

void print_pretty(std::ostream& os, const Expr& e);

void print_wrapped(std::ostream& os, const Expr& e, int min_precedence) {
  if (precedence(e) < min_precedence) {
    os << '(';
    print_pretty(os, e);
    os << ')';
  } else {
    print_pretty(os, e);
  }
}

void print_pretty(std::ostream& os, const Expr& e) {
  switch (e.kind()) {
    case Kind::Constant:
      print_rat(os, e.value(), false);
      return;
    case Kind::Variable:
      os << (e.var() == Var::X ? 'x' : 'y');
      return;
    case Kind::Sum: {
      bool first = true;
      for (const Expr& c : e.children()) {
        if (first) {
          print_wrapped(os, c, kAdditive);
        } else if (is_negative_term(c)) {
          os << " - ";
          print_wrapped(os, -c, kMultiplicative);
        } else {
          os << " + ";
          print_wrapped(os, c, kMultiplicative);
        }
        first = false;
      }
      return;
    }
    case Kind::Difference:
      print_wrapped(os, e.children()[0], kAdditive);
      os << " - ";
      print_wrapped(os, e.children()[1], kMultiplicative);
      return;
    case Kind::Product: {
      const auto f = e.children();
      std::size_t start = 0;
      if (f[0].is_constant() && f[0].value() < 0) {
        os << '-';
        const Rat mag = -f[0].value();
        if (mag == 1) {
          start = 1;
        } else {
          print_rat(os, mag, mag.get_den() != 1);
          os << '*';
          start = 1;
        }
        for (std::size_t i = start; i < f.size(); ++i) {
          if (i > start) os << '*';
          print_wrapped(os, f[i], kUnary);
        }
        return;
      }
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (i > 0) os << '*';
        print_wrapped(os, f[i], i == 0 ? kMultiplicative : kUnary);
      }
      return;
    }
    case Kind::Quotient:
      print_wrapped(os, e.children()[0], kMultiplicative);
      os << '/';
      print_wrapped(os, e.children()[1], kUnary);
      return;
    case Kind::Power:
      print_wrapped(os, e.children()[0], kAtom);
      os << '^' << e.exponent();
      return;
  }
}

}  // namespace

std::string to_string(const Expr& e) {
  std::ostringstream os;
  print_full(os, e);
  return os.str();
}

std::string to_pretty_string(const Expr& e) {
  std::ostringstream os;
  print_pretty(os, e);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Expr& e) { return os << to_pretty_string(e); }

}  // namespace lpdeinv
