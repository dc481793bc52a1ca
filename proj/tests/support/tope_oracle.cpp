#include "tope_oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sctt::testkit {

using shape::Point;
using shape::Tope;
using shape::TopeKind;

namespace {

int value_at(const Point& p, const std::vector<int>& point, int denominator) {
  switch (p.kind) {
    case Point::Kind::Zero: return 0;
    case Point::Kind::One: return denominator;
    case Point::Kind::Var: return point.at(static_cast<std::size_t>(p.var));
  }
  return 0;
}

std::vector<std::uint64_t> table(const Tope& phi, const std::vector<std::vector<int>>& pts, int d) {
  std::vector<std::uint64_t> bits((pts.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (holds_at(phi, pts[i], d)) bits[i / 64] |= std::uint64_t{1} << (i % 64);
  return bits;
}

std::vector<std::uint64_t> combine(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b, bool conj) {
  std::vector<std::uint64_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = conj ? (a[i] & b[i]) : (a[i] | b[i]);
  return out;
}

Sampled connect(const Sampled& a, const Sampled& b, bool conj) {
  return {conj ? Tope::conj(a.phi, b.phi) : Tope::disj(a.phi, b.phi), combine(a.fine, b.fine, conj),
          combine(a.coarse, b.coarse, conj)};
}

}  // namespace

bool holds_at(const Tope& phi, const std::vector<int>& point, int denominator) {
  switch (phi.kind()) {
    case TopeKind::Top: return true;
    case TopeKind::Bot: return false;
    case TopeKind::Leq:
      return value_at(phi.lhs_point(), point, denominator) <= value_at(phi.rhs_point(), point, denominator);
    case TopeKind::Equal:
      return value_at(phi.lhs_point(), point, denominator) == value_at(phi.rhs_point(), point, denominator);
    case TopeKind::And: return holds_at(phi.left(), point, denominator) && holds_at(phi.right(), point, denominator);
    case TopeKind::Or: return holds_at(phi.left(), point, denominator) || holds_at(phi.right(), point, denominator);
  }
  return false;
}

std::vector<std::vector<int>> grid(int n, int d) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& p : out)
      for (int v = 0; v <= d; ++v) {
        auto q = p;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<OrderType> order_types_by_sampling(int n) {
  std::set<OrderType> seen;
  const int d = n + 1;
  for (const auto& p : grid(n, d)) {
    std::set<int> values(p.begin(), p.end());
    values.insert(0);
    values.insert(d);
    std::map<int, int> rank_of;
    int r = 0;
    for (int v : values) rank_of[v] = r++;
    OrderType o;
    for (int v : p) o.rank.push_back(rank_of[v]);
    o.top = rank_of[d];
    seen.insert(o);
  }
  return {seen.begin(), seen.end()};
}

std::uint64_t order_type_count(int n) {
  // fubini[k]: ordered set partitions of k elements.
  std::vector<std::uint64_t> fubini(static_cast<std::size_t>(n) + 1, 0), binom_row;
  auto binom = [](int a, int b) {
    std::uint64_t r = 1;
    for (int i = 1; i <= b; ++i) r = r * static_cast<std::uint64_t>(a - b + i) / static_cast<std::uint64_t>(i);
    return r;
  };
  fubini[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= k; ++j) fubini[static_cast<std::size_t>(k)] += binom(k, j) * fubini[static_cast<std::size_t>(k - j)];
  // Choose the interior variables; each other variable equals 0 or 1.
  std::uint64_t total = 0;
  for (int k = 0; k <= n; ++k)
    total += binom(n, k) * fubini[static_cast<std::size_t>(k)] * (std::uint64_t{1} << (n - k));
  return total;
}

bool holds_in(const OrderType& order, const Tope& phi) { return holds_at(phi, order.rank, order.top); }

FormulaFamily generate_family(int n) {
  FormulaFamily f;
  f.vars = n;
  f.fine_grid = grid(n, 7);
  f.coarse_grid = grid(n, n + 1);
  auto sample = [&](const Tope& phi) {
    return Sampled{phi, table(phi, f.fine_grid, 7), table(phi, f.coarse_grid, n + 1)};
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) f.atoms.push_back(sample(Tope::leq(Point::variable(i), Point::variable(j))));
  for (int i = 0; i < n; ++i) {
    f.atoms.push_back(sample(Tope::equal(Point::variable(i), Point::zero())));
    f.atoms.push_back(sample(Tope::equal(Point::variable(i), Point::one())));
  }
  f.upto2 = f.atoms;
  for (bool conj : {true, false})
    for (const auto& a : f.atoms)
      for (const auto& b : f.atoms) f.upto2.push_back(connect(a, b, conj));
  f.upto3 = f.upto2;
  for (bool conj : {true, false})
    for (const auto& a : f.upto2)
      for (const auto& b : f.upto2)
        if (a.phi.depth() == 2 || b.phi.depth() == 2) f.upto3.push_back(connect(a, b, conj));
  return f;
}

bool refutes(const std::vector<std::uint64_t>& hyp, const std::vector<std::uint64_t>& goal) {
  for (std::size_t i = 0; i < hyp.size(); ++i)
    if (hyp[i] & ~goal[i]) return true;
  return false;
}

}  // namespace sctt::testkit
