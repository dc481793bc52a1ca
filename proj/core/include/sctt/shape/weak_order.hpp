#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "sctt/shape/tope.hpp"

namespace sctt::shape {

inline constexpr std::size_t kDefaultCubeCap = 8;

// Ordered list of cube variables, each of sort 2. Variable ids in formulas
// over a CubeContext are positions in `names`.
struct CubeContext {
  std::vector<std::string> names;

  std::size_t size() const { return names.size(); }
  friend bool operator==(const CubeContext&, const CubeContext&) = default;
};

class ShapeError : public std::runtime_error {
public:
  enum class Kind { ContextTooLarge, CubeMismatch, DuplicateVariable };
  ShapeError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

// An ordered partition of {0, 1} ∪ vars into blocks. Block 0 holds the
// endpoint 0, block `top` holds the endpoint 1, and 0 < top. Every block in
// between holds at least one variable.
struct WeakOrder {
  std::vector<int> rank;  // block index of each variable
  int top = 1;

  int rank_of(const Point& p) const {
    switch (p.kind) {
      case Point::Kind::Zero: return 0;
      case Point::Kind::One: return top;
      case Point::Kind::Var: return rank.at(static_cast<std::size_t>(p.var));
    }
    return 0;
  }

  // "{0,s} < {t} < {1}"
  std::string to_string(const CubeContext& ctx) const;

  friend bool operator==(const WeakOrder&, const WeakOrder&) = default;
  // Canonical order: rank vector lexicographically, then number of blocks.
  friend bool operator<(const WeakOrder& a, const WeakOrder& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.top < b.top;
  }
};

// Every weak order over `n` variables, in canonical order. Throws
// ShapeError(ContextTooLarge) when n > cap.
std::vector<WeakOrder> enumerate_weak_orders(std::size_t n, std::size_t cap = kDefaultCubeCap);
std::vector<WeakOrder> enumerate_weak_orders(const CubeContext& ctx, std::size_t cap = kDefaultCubeCap);

// All one-variable extensions of `order` (the new variable gets id
// order.rank.size()).
std::vector<WeakOrder> extend_weak_order(const WeakOrder& order);

bool eval_tope(const WeakOrder& order, const Tope& phi);

struct Entailment {
  bool valid = true;
  // Least refuting order in canonical order, when invalid.
  std::optional<WeakOrder> counter;
};

Entailment tope_entails(const CubeContext& ctx, const Tope& hyp, const Tope& goal, std::size_t cap = kDefaultCubeCap);

struct Shape {
  CubeContext ctx;
  Tope formula;

  static Shape delta1();           // {t : 2 | TOP}
  static Shape delta2();           // {(s,t) : 2*2 | t <= s}
  static Shape horn21();           // {(s,t) : 2*2 | s === 1 \/ t === 0}
  static Shape boundary_delta1();  // {t : 2 | t === 0 \/ t === 1}
};

// Inner ⊆ outer, comparing positionally. Throws ShapeError(CubeMismatch) when
// the cube contexts differ in length.
bool shape_includes(const Shape& inner, const Shape& outer, std::size_t cap = kDefaultCubeCap);

using Rational = boost::rational<long>;
using Sample = std::vector<Rational>;

// Independent semantic check over concrete points of [0,1]: false iff some
// sample satisfies hyp but not goal.
bool eval_tope_at(const Sample& sample, const Tope& phi);
bool point_sample_check(const CubeContext& ctx, const Tope& hyp, const Tope& goal, std::span<const Sample> samples);

// The grid {0, 1/d, ..., 1}^n.
std::vector<Sample> sample_grid(std::size_t n, long denominator);

}  // namespace sctt::shape
