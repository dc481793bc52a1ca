#pragma once

#include <compare>
#include <functional>
#include <memory>
#include <set>
#include <string>

namespace sctt::shape {

// A point of the directed interval: one of the endpoints, or a cube variable.
// What a variable id means (context position, de Bruijn index or level) is up
// to the owner of the formula.
struct Point {
  enum class Kind : unsigned char { Zero, One, Var };
  Kind kind = Kind::Zero;
  int var = -1;

  static Point zero() { return {Kind::Zero, -1}; }
  static Point one() { return {Kind::One, -1}; }
  static Point variable(int id) { return {Kind::Var, id}; }

  bool is_var() const { return kind == Kind::Var; }
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

enum class TopeKind : unsigned char { Top, Bot, Leq, Equal, And, Or };

// Immutable formula over {TOP, BOT, s <= t, s === t, /\, \/}. No negation or
// implication exists in this fragment.
class Tope {
public:
  Tope();  // TOP

  static Tope top();
  static Tope bot();
  static Tope leq(Point lhs, Point rhs);
  static Tope equal(Point lhs, Point rhs);
  static Tope conj(Tope lhs, Tope rhs);
  static Tope disj(Tope lhs, Tope rhs);

  TopeKind kind() const { return node_->kind; }
  bool is_atom() const { return kind() == TopeKind::Leq || kind() == TopeKind::Equal; }
  const Point& lhs_point() const { return node_->lhs; }
  const Point& rhs_point() const { return node_->rhs; }
  const Tope& left() const { return *node_->left; }
  const Tope& right() const { return *node_->right; }

  // Number of nested connectives plus one (atoms have depth 1).
  int depth() const;
  std::set<int> variables() const;
  Tope map_points(const std::function<Point(const Point&)>& f) const;

  // Structural equality.
  friend bool operator==(const Tope& a, const Tope& b);

  // Renders with the given variable namer, using the concrete syntax
  // ("s <= t /\ t === 1").
  std::string to_string(const std::function<std::string(int)>& name) const;

private:
  struct Node {
    TopeKind kind;
    Point lhs, rhs;
    std::shared_ptr<const Tope> left, right;
  };
  explicit Tope(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace sctt::shape
