#include "lpdeinv/tidy.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

namespace lpdeinv {

namespace {

struct Mono {
  int x = 0;
  int y = 0;
};

// Graded order, highest total degree first, ties broken by the x degree.
struct MonoOrder {
  bool operator()(const Mono& a, const Mono& b) const {
    if (a.x + a.y != b.x + b.y) return a.x + a.y > b.x + b.y;
    return a.x > b.x;
  }
};

using Poly = std::map<Mono, Rat, MonoOrder>;

struct TooLarge {};

class Tidier {
 public:
  explicit Tidier(const TidyLimits& limits) : limits_(limits) {}

  struct Frac {
    Poly num, den;
  };

  const Frac& convert(const Expr& e) {
    if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
    Frac f = build(e);
    pinned_.push_back(e);
    return memo_.emplace(e.id(), std::move(f)).first->second;
  }

  static Poly constant(const Rat& c) {
    Poly p;
    if (c != 0) p[Mono{}] = c;
    return p;
  }

  void check(const Poly& p) const {
    if (p.size() > limits_.max_terms) throw TooLarge{};
  }

  static bool is_constant(const Poly& p) { return p.empty() || (p.size() == 1 && p.begin()->first.x == 0 && p.begin()->first.y == 0); }
  static Rat constant_value(const Poly& p) { return p.empty() ? Rat(0) : p.begin()->second; }

  Poly add(const Poly& a, const Poly& b, int sign = 1) const {
    Poly r = a;
    for (const auto& [m, c] : b) {
      Rat& slot = r[m];
      if (sign > 0) {
        slot += c;
      } else {
        slot -= c;
      }
      if (slot == 0) r.erase(m);
    }
    check(r);
    return r;
  }

  Poly mul(const Poly& a, const Poly& b) const {
    if (a.size() * b.size() > limits_.max_terms * limits_.max_terms) throw TooLarge{};
    Poly r;
    for (const auto& [ma, ca] : a) {
      for (const auto& [mb, cb] : b) {
        const Mono m{ma.x + mb.x, ma.y + mb.y};
        Rat& slot = r[m];
        slot += ca * cb;
        if (slot == 0) r.erase(m);
      }
    }
    check(r);
    return r;
  }

  static Poly scale(const Poly& a, const Rat& c) {
    Poly r;
    if (c == 0) return r;
    for (const auto& [m, v] : a) r[m] = v * c;
    return r;
  }

  // a / b when b divides a exactly.
  std::optional<Poly> divide(Poly a, const Poly& b) const {
    if (b.empty()) return std::nullopt;
    const Mono lb = b.begin()->first;
    const Rat cb = b.begin()->second;
    Poly q;
    std::size_t steps = 0;
    while (!a.empty()) {
      if (++steps > 4 * limits_.max_terms) return std::nullopt;
      const Mono la = a.begin()->first;
      if (la.x < lb.x || la.y < lb.y) return std::nullopt;
      const Mono m{la.x - lb.x, la.y - lb.y};
      const Rat c = a.begin()->second / cb;
      q[m] = c;
      for (const auto& [mb, vb] : b) {
        const Mono t{mb.x + m.x, mb.y + m.y};
        Rat& slot = a[t];
        slot -= c * vb;
        if (slot == 0) a.erase(t);
      }
      if (a.size() > 4 * limits_.max_terms) return std::nullopt;
    }
    return q;
  }

  void normalize(Frac& f) const {
    if (f.num.empty()) {
      f.den = constant(1);
      return;
    }
    // Cancel the common monomial factor.
    int mx = f.num.begin()->first.x, my = f.num.begin()->first.y;
    for (const Poly* p : {&f.num, &f.den}) {
      for (const auto& [m, c] : *p) {
        mx = std::min(mx, m.x);
        my = std::min(my, m.y);
      }
    }
    if (mx > 0 || my > 0) {
      for (Poly* p : {&f.num, &f.den}) {
        Poly r;
        for (const auto& [m, c] : *p) r[Mono{m.x - mx, m.y - my}] = c;
        *p = std::move(r);
      }
    }
    if (is_constant(f.den)) {
      f.num = scale(f.num, 1 / constant_value(f.den));
      f.den = constant(1);
      return;
    }
    if (auto q = divide(f.num, f.den)) {
      f.num = std::move(*q);
      f.den = constant(1);
      return;
    }
    if (is_constant(f.num)) return;
    if (auto q = divide(f.den, f.num)) {
      f.num = constant(1);
      f.den = std::move(*q);
    }
  }

  Frac sum(const Frac& a, const Frac& b, int sign) const {
    Frac r;
    if (equal_poly(a.den, b.den)) {
      r.num = add(a.num, b.num, sign);
      r.den = a.den;
    } else if (auto q = divide(b.den, a.den)) {
      r.num = add(mul(a.num, *q), b.num, sign);
      r.den = b.den;
    } else if (auto q2 = divide(a.den, b.den)) {
      r.num = add(a.num, mul(b.num, *q2), sign);
      r.den = a.den;
    } else {
      r.num = add(mul(a.num, b.den), mul(b.num, a.den), sign);
      r.den = mul(a.den, b.den);
    }
    normalize(r);
    return r;
  }

  Frac product(const Frac& a, const Frac& b) const {
    Frac r{mul(a.num, b.num), mul(a.den, b.den)};
    normalize(r);
    return r;
  }

  Frac quotient(const Frac& a, const Frac& b) const {
    if (b.num.empty()) throw TooLarge{};  // pole: leave the expression alone
    Frac r{mul(a.num, b.den), mul(a.den, b.num)};
    normalize(r);
    return r;
  }

  static bool equal_poly(const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return false;
    for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
      if (ia->first.x != ib->first.x || ia->first.y != ib->first.y || ia->second != ib->second) return false;
    }
    return true;
  }

  Frac build(const Expr& e) {
    switch (e.kind()) {
      case Kind::Constant:
        return {constant(e.value()), constant(1)};
      case Kind::Variable: {
        Poly p;
        p[e.var() == Var::X ? Mono{1, 0} : Mono{0, 1}] = 1;
        return {p, constant(1)};
      }
      case Kind::Sum: {
        Frac acc = convert(e.children()[0]);
        for (std::size_t i = 1; i < e.children().size(); ++i) acc = sum(acc, convert(e.children()[i]), 1);
        return acc;
      }
      case Kind::Difference:
        return sum(convert(e.children()[0]), convert(e.children()[1]), -1);
      case Kind::Product: {
        Frac acc = convert(e.children()[0]);
        for (std::size_t i = 1; i < e.children().size(); ++i) acc = product(acc, convert(e.children()[i]));
        return acc;
      }
      case Kind::Quotient:
        return quotient(convert(e.children()[0]), convert(e.children()[1]));
      case Kind::Power: {
        Frac base = convert(e.children()[0]);
        const int n = e.exponent();
        Frac acc{constant(1), constant(1)};
        for (int i = 0; i < std::abs(n); ++i) acc = product(acc, base);
        if (n < 0) {
          if (acc.num.empty()) throw TooLarge{};
          std::swap(acc.num, acc.den);
          normalize(acc);
        }
        return acc;
      }
    }
    throw TooLarge{};
  }

 private:
  TidyLimits limits_;
  std::unordered_map<const detail::Node*, Frac> memo_;
  std::vector<Expr> pinned_;
};

mpz_class content(const Poly& p) {
  // gcd of numerators over lcm of denominators, as the integer that makes
  // p primitive after clearing denominators.
  mpz_class g = 0;
  for (const auto& [m, c] : p) g = gcd(g, c.get_num());
  return g;
}

mpz_class denominators(const Poly& p) {
  mpz_class l = 1;
  for (const auto& [m, c] : p) l = lcm(l, c.get_den());
  return l;
}

Expr to_expr(const Poly& p) {
  std::vector<Expr> terms;
  for (const auto& [m, c] : p) {
    std::vector<Expr> factors{Expr(c)};
    if (m.x != 0) factors.push_back(pow(Expr::x(), m.x));
    if (m.y != 0) factors.push_back(pow(Expr::y(), m.y));
    terms.push_back(Expr::product(factors));
  }
  return Expr::sum(terms);
}

}  // namespace

Expr tidy(const Expr& e, const TidyLimits& limits) {
  if (e.kind() == Kind::Constant || e.kind() == Kind::Variable) return e;
  if (node_count(e) > limits.max_nodes) return e;
  Tidier t(limits);
  Tidier::Frac f;
  try {
    f = t.convert(e);
  } catch (const TooLarge&) {
    return e;
  }
  if (f.num.empty()) return Expr();

  // Integer, primitive numerator and denominator; the overall rational
  // factor p/q is split between them and the denominator's leading
  // coefficient is made positive.
  Rat factor = 1;
  for (Poly* poly : {&f.num, &f.den}) {
    const mpz_class l = denominators(*poly);
    Poly scaled = Tidier::scale(*poly, Rat(l));
    const mpz_class g = content(scaled);
    scaled = Tidier::scale(scaled, Rat(1) / Rat(g));
    const Rat k = Rat(g) / Rat(l);
    if (poly == &f.num) {
      factor *= k;
    } else {
      factor /= k;
    }
    *poly = std::move(scaled);
  }
  if (f.den.begin()->second < 0) {
    f.den = Tidier::scale(f.den, -1);
    factor = -factor;
  }
  factor.canonicalize();
  const Expr num = to_expr(Tidier::scale(f.num, Rat(factor.get_num())));
  const Expr den = to_expr(Tidier::scale(f.den, Rat(factor.get_den())));
  if (den.is_one()) return num;
  return Expr::quotient(num, den);
}

}  // namespace lpdeinv
