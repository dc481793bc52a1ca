#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sctt/kernel/term.hpp"

namespace sctt::kernel {

struct Value;
struct Neutral;
using Val = std::shared_ptr<const Value>;
using NeuPtr = std::shared_ptr<const Neutral>;

// Persistent environment; index 0 is the innermost binding.
class Env {
public:
  Env() = default;
  Env push(Val v) const;
  const Val& at(int index) const;
  std::size_t size() const { return size_; }

private:
  struct Node {
    Val value;
    std::shared_ptr<const Node> next;
  };
  std::shared_ptr<const Node> head_;
  std::size_t size_ = 0;
};

struct Closure {
  Env env;
  TermPtr term;  // body; for extension types, the whole ExtType node
};

// Points and topes inside values refer to variables by de Bruijn level.
struct VClause {
  shape::Tope tope;
  Val body;
};

enum class VKind { Universe, Pi, Lambda, Sigma, Pair, Id, Refl, ExtType, ExtLambda, Point, RecOr, Neutral };

struct Value {
  VKind kind;
  std::string name;           // binder name hint
  Val a, b, c;                // Pi/Sigma: a = domain; Pair: (a, b); Id: a = type, b = lhs, c = rhs
  Closure closure;            // Pi/Sigma codomain, lambda bodies, extension types
  shape::Point point;         // Point
  std::vector<VClause> clauses;  // RecOr
  NeuPtr neutral;             // Neutral
};

enum class NKind { Var, Global, App, First, Second, J, ExtApp };

// Eliminations stuck on a variable or an opaque constant.
struct Neutral {
  NKind kind;
  int level = -1;                 // Var
  std::string name;               // Global
  NeuPtr head;                    // App, First, Second, ExtApp, J (the path)
  Val arg;                        // App
  std::vector<Val> motive;        // J: type, base, motive, refl case, target
  std::vector<shape::Point> points;  // ExtApp
};

Val make_value(VKind kind);
Val vuniverse();
Val vrefl();
Val vpoint(shape::Point p);
Val vneutral(NeuPtr n);
Val vvar(int level);
Val vglobal(const std::string& name);

// Extension type instantiated at concrete points.
struct ExtInstance {
  shape::Tope shape;
  Val body;
  std::vector<VClause> clauses;
};

}  // namespace sctt::kernel
