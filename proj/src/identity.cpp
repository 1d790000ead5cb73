#include "lpdeinv/identity.hpp"

#include <stdexcept>
#include <unordered_map>

#include "lpdeinv/errors.hpp"

namespace lpdeinv {

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

namespace {

enum class State : std::uint8_t { Pending, Value, Pole };

/// Values of every indexed node at one sample point.
struct PointValues {
  Point point;
  std::vector<mpq_class> values;
  std::vector<State> state;
};

}  // namespace

/// Nodes are indexed once, in the order they are first reached, and then
/// evaluated at each point into flat per-point arrays.
struct IdentityTester::Impl {
  explicit Impl(std::uint64_t seed) : rng(seed) {}

  std::mt19937_64 rng;
  std::vector<PointValues> points;

  std::unordered_map<const detail::Node*, std::uint32_t> index;
  std::vector<Expr> nodes;  // slot -> node; also keeps nodes alive
  std::vector<std::uint32_t> child_begin;
  std::vector<std::uint32_t> child_slots;

  std::uint32_t slot(const Expr& root);
  PointValues& point(std::size_t i, int bound);
  /// Value of `s` at point `p`, or nullptr at a pole.
  const mpq_class* evaluate(PointValues& p, std::uint32_t s);
  void compute(PointValues& p, std::uint32_t s);
};

std::uint32_t IdentityTester::Impl::slot(const Expr& root) {
  if (auto it = index.find(root.id()); it != index.end()) return it->second;
  // Iterative post-order so that children get slots before their parents.
  struct Frame {
    Expr e;
    std::size_t next;
  };
  std::vector<Frame> stack{{root, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto children = f.e.children();
    if (f.next < children.size()) {
      const Expr& c = children[f.next++];
      if (!index.count(c.id())) stack.push_back({c, 0});
      continue;
    }
    if (!index.count(f.e.id())) {
      const auto s = static_cast<std::uint32_t>(nodes.size());
      child_begin.push_back(static_cast<std::uint32_t>(child_slots.size()));
      for (const Expr& c : children) child_slots.push_back(index.at(c.id()));
      nodes.push_back(f.e);
      index.emplace(f.e.id(), s);
    }
    stack.pop_back();
  }
  child_begin.push_back(static_cast<std::uint32_t>(child_slots.size()));
  child_begin.pop_back();
  return index.at(root.id());
}

PointValues& IdentityTester::Impl::point(std::size_t i, int bound) {
  while (points.size() <= i) {
    const std::int64_t b = bound;
    const std::int64_t xn = uniform_int(rng, -b, b);
    const std::int64_t xd = uniform_int(rng, 1, b);
    const std::int64_t yn = uniform_int(rng, -b, b);
    const std::int64_t yd = uniform_int(rng, 1, b);
    PointValues p;
    p.point.x = Rat(mpz_class(static_cast<long>(xn)), mpz_class(static_cast<long>(xd)));
    p.point.y = Rat(mpz_class(static_cast<long>(yn)), mpz_class(static_cast<long>(yd)));
    p.point.x.canonicalize();
    p.point.y.canonicalize();
    points.push_back(std::move(p));
  }
  return points[i];
}

void IdentityTester::Impl::compute(PointValues& p, std::uint32_t s) {
  const Expr& e = nodes[s];
  mpq_class& out = p.values[s];
  const std::uint32_t* kids = child_slots.data() + child_begin[s];
  const std::size_t n = e.children().size();
  for (std::size_t i = 0; i < n; ++i) {
    if (p.state[kids[i]] == State::Pole) {
      p.state[s] = State::Pole;
      return;
    }
  }
  const auto child = [&](std::size_t i) -> const mpq_class& { return p.values[kids[i]]; };
  switch (e.kind()) {
    case Kind::Constant:
      out = e.value();
      break;
    case Kind::Variable:
      out = e.var() == Var::X ? p.point.x : p.point.y;
      break;
    case Kind::Sum:
      mpq_add(out.get_mpq_t(), child(0).get_mpq_t(), child(1).get_mpq_t());
      for (std::size_t i = 2; i < n; ++i) mpq_add(out.get_mpq_t(), out.get_mpq_t(), child(i).get_mpq_t());
      break;
    case Kind::Difference:
      mpq_sub(out.get_mpq_t(), child(0).get_mpq_t(), child(1).get_mpq_t());
      break;
    case Kind::Product:
      mpq_mul(out.get_mpq_t(), child(0).get_mpq_t(), child(1).get_mpq_t());
      for (std::size_t i = 2; i < n && sgn(out) != 0; ++i) {
        mpq_mul(out.get_mpq_t(), out.get_mpq_t(), child(i).get_mpq_t());
      }
      break;
    case Kind::Quotient:
      if (sgn(child(1)) == 0) {
        p.state[s] = State::Pole;
        return;
      }
      mpq_div(out.get_mpq_t(), child(0).get_mpq_t(), child(1).get_mpq_t());
      break;
    case Kind::Power: {
      const mpq_class& b = child(0);
      const int k = e.exponent();
      if (k < 0 && sgn(b) == 0) {
        p.state[s] = State::Pole;
        return;
      }
      const unsigned long mag = static_cast<unsigned long>(k < 0 ? -static_cast<long>(k) : k);
      // Powers of coprime integers stay coprime, so no canonicalization.
      mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), mag);
      mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), mag);
      if (k < 0) mpq_inv(out.get_mpq_t(), out.get_mpq_t());
      break;
    }
  }
  p.state[s] = State::Value;
}

const mpq_class* IdentityTester::Impl::evaluate(PointValues& p, std::uint32_t root) {
  if (p.values.size() < nodes.size()) {
    p.values.resize(nodes.size());
    p.state.resize(nodes.size(), State::Pending);
  }
  if (p.state[root] == State::Pending) {
    std::vector<std::uint32_t> stack{root};
    while (!stack.empty()) {
      const std::uint32_t s = stack.back();
      if (p.state[s] != State::Pending) {
        stack.pop_back();
        continue;
      }
      bool ready = true;
      for (std::uint32_t i = child_begin[s]; i < child_begin[s] + nodes[s].children().size(); ++i) {
        if (p.state[child_slots[i]] == State::Pending) {
          stack.push_back(child_slots[i]);
          ready = false;
        }
      }
      if (!ready) continue;
      compute(p, s);
      stack.pop_back();
    }
  }
  return p.state[root] == State::Value ? &p.values[root] : nullptr;
}

IdentityTester::IdentityTester(const EqOracle& oracle) : oracle_(oracle) {
  if (oracle_.trials < 1) throw std::invalid_argument("EqOracle: trials must be >= 1");
  if (oracle_.bound < 1) throw std::invalid_argument("EqOracle: bound must be >= 1");
  if (oracle_.max_pole_retries < 1) throw std::invalid_argument("EqOracle: max_pole_retries must be >= 1");
  impl_ = std::make_unique<Impl>(oracle_.seed);
}

IdentityTester::~IdentityTester() = default;
IdentityTester::IdentityTester(IdentityTester&&) noexcept = default;
IdentityTester& IdentityTester::operator=(IdentityTester&&) noexcept = default;

bool IdentityTester::is_zero(const Expr& e) {
  if (e.is_constant()) return e.value() == 0;
  const std::uint32_t s = impl_->slot(e);
  std::size_t next = 0;
  for (int t = 0; t < oracle_.trials; ++t) {
    int retries = 0;
    for (;;) {
      const mpq_class* v = impl_->evaluate(impl_->point(next++, oracle_.bound), s);
      if (v) {
        if (sgn(*v) != 0) return false;
        break;
      }
      if (++retries > oracle_.max_pole_retries) {
        throw SamplingExhaustedError("no pole-free sample point found after " +
                                     std::to_string(oracle_.max_pole_retries) + " retries");
      }
    }
  }
  return true;
}

Rat IdentityTester::sample_value(const Expr& e) {
  if (e.is_constant()) return e.value();
  const std::uint32_t s = impl_->slot(e);
  for (int i = 0; i <= oracle_.max_pole_retries; ++i) {
    if (const mpq_class* v = impl_->evaluate(impl_->point(static_cast<std::size_t>(i), oracle_.bound), s)) return *v;
  }
  throw SamplingExhaustedError("no pole-free sample point found");
}

bool eq_zero(const Expr& e, const EqOracle& o) {
  IdentityTester t(o);
  return t.is_zero(e);
}

bool eq_expr(const Expr& a, const Expr& b, const EqOracle& o) { return eq_zero(a - b, o); }

}  // namespace lpdeinv
