#pragma once

#include <cstdint>
#include <vector>

#include "sctt/shape/tope.hpp"
#include "sctt/shape/weak_order.hpp"

// Semantic reference for the tope solver. Nothing here calls into the solver:
// formulas are evaluated at concrete interval points, given as integers over
// a common denominator.
namespace sctt::testkit {

bool holds_at(const shape::Tope& phi, const std::vector<int>& point, int denominator);

// All points of {0, 1/d, ..., 1}^n.
std::vector<std::vector<int>> grid(int n, int d);

// An order type of n variables inside [0, 1]: the rank of each variable among
// the distinct values {0, v1, ..., vn, 1}, and the rank of 1.
struct OrderType {
  std::vector<int> rank;
  int top = 1;
  bool operator<(const OrderType& o) const { return rank != o.rank ? rank < o.rank : top < o.top; }
  bool operator==(const OrderType& o) const = default;
};

// Order types realized by grid points with denominator n + 1, deduplicated
// and sorted. Every order type of n points in [0, 1] occurs on that grid.
std::vector<OrderType> order_types_by_sampling(int n);

// Count by recursion on the variables: the interior variables form an
// ordered set partition, the rest sit on 0 or 1.
std::uint64_t order_type_count(int n);

// Truth of a formula in an order type, reading ranks as the points
// rank / top.
bool holds_in(const OrderType& order, const shape::Tope& phi);

// A formula together with its truth table on two grids.
struct Sampled {
  shape::Tope phi;
  std::vector<std::uint64_t> fine;    // grid 1/7
  std::vector<std::uint64_t> coarse;  // grid 1/(n+1)
};

struct FormulaFamily {
  int vars = 0;
  std::vector<std::vector<int>> fine_grid, coarse_grid;
  std::vector<Sampled> atoms;     // depth 1
  std::vector<Sampled> upto2;     // depth <= 2
  std::vector<Sampled> upto3;     // depth <= 3
};

// Atoms x_i <= x_j (i != j), x_i === 0, x_i === 1 over n variables, closed
// under /\ and \/ up to depth 3, each formula generated exactly once per
// syntax tree.
FormulaFamily generate_family(int n);

// hyp /\ not goal is satisfied somewhere on the grid.
bool refutes(const std::vector<std::uint64_t>& hyp, const std::vector<std::uint64_t>& goal);

}  // namespace sctt::testkit
