#include "sctt/shape/weak_order.hpp"

#include <algorithm>
#include <array>
#include <mutex>

namespace sctt::shape {

std::string WeakOrder::to_string(const CubeContext& ctx) const {
  std::string out;
  for (int block = 0; block <= top; ++block) {
    if (block > 0) out += " < ";
    out += "{";
    bool first = true;
    auto add = [&](const std::string& s) {
      if (!first) out += ",";
      out += s;
      first = false;
    };
    if (block == 0) add("0");
    for (std::size_t i = 0; i < rank.size(); ++i)
      if (rank[i] == block) add(i < ctx.names.size() ? ctx.names[i] : "#" + std::to_string(i));
    if (block == top) add("1");
    out += "}";
  }
  return out;
}

std::vector<WeakOrder> extend_weak_order(const WeakOrder& order) {
  std::vector<WeakOrder> out;
  // Into an existing block.
  for (int b = 0; b <= order.top; ++b) {
    WeakOrder w = order;
    w.rank.push_back(b);
    out.push_back(std::move(w));
  }
  // Into a fresh block strictly between blocks b and b+1.
  for (int b = 0; b < order.top; ++b) {
    WeakOrder w = order;
    for (int& r : w.rank)
      if (r > b) ++r;
    w.top += 1;
    w.rank.push_back(b + 1);
    out.push_back(std::move(w));
  }
  return out;
}

namespace {

void require_distinct(const CubeContext& ctx) {
  for (std::size_t i = 0; i < ctx.names.size(); ++i)
    for (std::size_t j = i + 1; j < ctx.names.size(); ++j)
      if (ctx.names[i] == ctx.names[j])
        throw ShapeError(ShapeError::Kind::DuplicateVariable, "cube context has duplicate variable names");
}

}  // namespace

std::vector<WeakOrder> enumerate_weak_orders(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw ShapeError(ShapeError::Kind::ContextTooLarge,
                     "cube context has " + std::to_string(n) + " variables, cap is " + std::to_string(cap));
  std::vector<WeakOrder> orders{WeakOrder{{}, 1}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<WeakOrder> next;
    for (const auto& w : orders) {
      auto ext = extend_weak_order(w);
      next.insert(next.end(), std::make_move_iterator(ext.begin()), std::make_move_iterator(ext.end()));
    }
    orders = std::move(next);
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

std::vector<WeakOrder> enumerate_weak_orders(const CubeContext& ctx, std::size_t cap) {
  require_distinct(ctx);
  return enumerate_weak_orders(ctx.size(), cap);
}

bool eval_tope(const WeakOrder& order, const Tope& phi) {
  switch (phi.kind()) {
    case TopeKind::Top: return true;
    case TopeKind::Bot: return false;
    case TopeKind::Leq: return order.rank_of(phi.lhs_point()) <= order.rank_of(phi.rhs_point());
    case TopeKind::Equal: return order.rank_of(phi.lhs_point()) == order.rank_of(phi.rhs_point());
    case TopeKind::And: return eval_tope(order, phi.left()) && eval_tope(order, phi.right());
    case TopeKind::Or: return eval_tope(order, phi.left()) || eval_tope(order, phi.right());
  }
  return false;
}

namespace {

// Small contexts are decided over and over while checking; their orders are
// enumerated once per process.
constexpr std::size_t kCached = 6;

const std::vector<WeakOrder>& cached_orders(std::size_t n) {
  static std::array<std::once_flag, kCached + 1> once;
  static std::array<std::vector<WeakOrder>, kCached + 1> orders;
  std::call_once(once[n], [n] { orders[n] = enumerate_weak_orders(n, kCached); });
  return orders[n];
}

}  // namespace

Entailment tope_entails(const CubeContext& ctx, const Tope& hyp, const Tope& goal, std::size_t cap) {
  std::vector<WeakOrder> large;
  const std::vector<WeakOrder>* orders = nullptr;
  if (ctx.size() <= kCached && ctx.size() <= cap) {
    require_distinct(ctx);
    orders = &cached_orders(ctx.size());
  } else {
    large = enumerate_weak_orders(ctx, cap);
    orders = &large;
  }
  // Orders come out canonically sorted, so the first refutation is the least.
  for (const auto& order : *orders) {
    if (eval_tope(order, hyp) && !eval_tope(order, goal)) return {false, order};
  }
  return {true, std::nullopt};
}

Shape Shape::delta1() { return {{{"t"}}, Tope::top()}; }

Shape Shape::delta2() {
  return {{{"s", "t"}}, Tope::leq(Point::variable(1), Point::variable(0))};
}

Shape Shape::horn21() {
  return {{{"s", "t"}},
          Tope::disj(Tope::equal(Point::variable(0), Point::one()), Tope::equal(Point::variable(1), Point::zero()))};
}

Shape Shape::boundary_delta1() {
  return {{{"t"}},
          Tope::disj(Tope::equal(Point::variable(0), Point::zero()), Tope::equal(Point::variable(0), Point::one()))};
}

bool shape_includes(const Shape& inner, const Shape& outer, std::size_t cap) {
  if (inner.ctx.size() != outer.ctx.size())
    throw ShapeError(ShapeError::Kind::CubeMismatch, "shapes live in cubes of dimension " +
                                                         std::to_string(inner.ctx.size()) + " and " +
                                                         std::to_string(outer.ctx.size()));
  return tope_entails(inner.ctx, inner.formula, outer.formula, cap).valid;
}

namespace {

Rational point_value(const Sample& sample, const Point& p) {
  switch (p.kind) {
    case Point::Kind::Zero: return Rational(0);
    case Point::Kind::One: return Rational(1);
    case Point::Kind::Var: return sample.at(static_cast<std::size_t>(p.var));
  }
  return Rational(0);
}

}  // namespace

bool eval_tope_at(const Sample& sample, const Tope& phi) {
  switch (phi.kind()) {
    case TopeKind::Top: return true;
    case TopeKind::Bot: return false;
    case TopeKind::Leq: return point_value(sample, phi.lhs_point()) <= point_value(sample, phi.rhs_point());
    case TopeKind::Equal: return point_value(sample, phi.lhs_point()) == point_value(sample, phi.rhs_point());
    case TopeKind::And: return eval_tope_at(sample, phi.left()) && eval_tope_at(sample, phi.right());
    case TopeKind::Or: return eval_tope_at(sample, phi.left()) || eval_tope_at(sample, phi.right());
  }
  return false;
}

bool point_sample_check(const CubeContext&, const Tope& hyp, const Tope& goal, std::span<const Sample> samples) {
  for (const auto& s : samples)
    if (eval_tope_at(s, hyp) && !eval_tope_at(s, goal)) return false;
  return true;
}

std::vector<Sample> sample_grid(std::size_t n, long denominator) {
  std::vector<Sample> out{Sample{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Sample> next;
    next.reserve(out.size() * static_cast<std::size_t>(denominator + 1));
    for (const auto& s : out)
      for (long k = 0; k <= denominator; ++k) {
        Sample e = s;
        e.emplace_back(k, denominator);
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace sctt::shape
