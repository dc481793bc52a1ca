#include "sctt/shape/tope.hpp"

#include <algorithm>

namespace sctt::shape {

namespace {

const Tope& shared_top() {
  static const Tope t = Tope::top();
  return t;
}

std::string point_string(const Point& p, const std::function<std::string(int)>& name) {
  switch (p.kind) {
    case Point::Kind::Zero: return "0";
    case Point::Kind::One: return "1";
    case Point::Kind::Var: return name(p.var);
  }
  return "?";
}

// Precedence: \/ (1) < /\ (2) < atoms (3).
int precedence(TopeKind k) {
  switch (k) {
    case TopeKind::Or: return 1;
    case TopeKind::And: return 2;
    default: return 3;
  }
}

}  // namespace

Tope::Tope() : Tope(shared_top()) {}

Tope Tope::top() { return Tope(std::make_shared<const Node>(Node{TopeKind::Top, {}, {}, nullptr, nullptr})); }
Tope Tope::bot() { return Tope(std::make_shared<const Node>(Node{TopeKind::Bot, {}, {}, nullptr, nullptr})); }

Tope Tope::leq(Point lhs, Point rhs) {
  return Tope(std::make_shared<const Node>(Node{TopeKind::Leq, lhs, rhs, nullptr, nullptr}));
}

Tope Tope::equal(Point lhs, Point rhs) {
  return Tope(std::make_shared<const Node>(Node{TopeKind::Equal, lhs, rhs, nullptr, nullptr}));
}

Tope Tope::conj(Tope lhs, Tope rhs) {
  return Tope(std::make_shared<const Node>(Node{TopeKind::And, {}, {}, std::make_shared<const Tope>(std::move(lhs)),
                                                std::make_shared<const Tope>(std::move(rhs))}));
}

Tope Tope::disj(Tope lhs, Tope rhs) {
  return Tope(std::make_shared<const Node>(Node{TopeKind::Or, {}, {}, std::make_shared<const Tope>(std::move(lhs)),
                                                std::make_shared<const Tope>(std::move(rhs))}));
}

int Tope::depth() const {
  if (kind() == TopeKind::And || kind() == TopeKind::Or) return 1 + std::max(left().depth(), right().depth());
  return 1;
}

std::set<int> Tope::variables() const {
  std::set<int> out;
  std::function<void(const Tope&)> go = [&](const Tope& t) {
    switch (t.kind()) {
      case TopeKind::Leq:
      case TopeKind::Equal:
        if (t.lhs_point().is_var()) out.insert(t.lhs_point().var);
        if (t.rhs_point().is_var()) out.insert(t.rhs_point().var);
        break;
      case TopeKind::And:
      case TopeKind::Or:
        go(t.left());
        go(t.right());
        break;
      default: break;
    }
  };
  go(*this);
  return out;
}

Tope Tope::map_points(const std::function<Point(const Point&)>& f) const {
  switch (kind()) {
    case TopeKind::Top:
    case TopeKind::Bot: return *this;
    case TopeKind::Leq: return leq(f(lhs_point()), f(rhs_point()));
    case TopeKind::Equal: return equal(f(lhs_point()), f(rhs_point()));
    case TopeKind::And: return conj(left().map_points(f), right().map_points(f));
    case TopeKind::Or: return disj(left().map_points(f), right().map_points(f));
  }
  return *this;
}

bool operator==(const Tope& a, const Tope& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TopeKind::Top:
    case TopeKind::Bot: return true;
    case TopeKind::Leq:
    case TopeKind::Equal: return a.lhs_point() == b.lhs_point() && a.rhs_point() == b.rhs_point();
    case TopeKind::And:
    case TopeKind::Or: return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

std::string Tope::to_string(const std::function<std::string(int)>& name) const {
  switch (kind()) {
    case TopeKind::Top: return "TOP";
    case TopeKind::Bot: return "BOT";
    case TopeKind::Leq: return point_string(lhs_point(), name) + " <= " + point_string(rhs_point(), name);
    case TopeKind::Equal: return point_string(lhs_point(), name) + " === " + point_string(rhs_point(), name);
    case TopeKind::And:
    case TopeKind::Or: {
      const int prec = precedence(kind());
      // Both connectives are printed left-associated; a right child of the
      // same connective keeps its parentheses so the tree shape survives.
      auto side = [&](const Tope& child, bool right_side) {
        const int cp = precedence(child.kind());
        std::string s = child.to_string(name);
        if (cp < prec || (right_side && cp == prec)) return "(" + s + ")";
        return s;
      };
      return side(left(), false) + (kind() == TopeKind::And ? " /\\ " : " \\/ ") + side(right(), true);
    }
  }
  return "";
}

}  // namespace sctt::shape
