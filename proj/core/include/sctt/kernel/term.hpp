#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sctt/diagnostics.hpp"
#include "sctt/shape/tope.hpp"

namespace sctt::kernel {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// A tope guarding a term. Point variables in `tope` are de Bruijn indices in
// core terms and levels in values.
struct Clause {
  shape::Tope tope;
  TermPtr body;
};

enum class TermKind {
  Var,       // index
  Global,    // name
  Universe,
  Pi,        // name, args = [domain, codomain]
  Lambda,    // name, args = [body]
  App,       // args = [fn, arg]
  Sigma,     // name, args = [first, second]
  Pair,      // args = [first, second]
  First,     // args = [pair]
  Second,    // args = [pair]
  Id,        // args = [type, lhs, rhs]
  Refl,
  IdJ,       // args = [type, base, motive, refl_case, target, path]
  ExtType,   // binders, shape, args = [body], clauses = boundary
  ExtLambda, // binders, args = [body]
  ExtApp,    // args = [fn], points
  RecOr,     // clauses
  Annot,     // args = [term, type]
  Hole,
};

// Scope-checked, nameless core syntax. Binder names are kept only for
// printing. All variables (cube and type layer) share one index space; an
// extension binder over n cube variables binds n consecutive indices with the
// last name innermost.
struct Term {
  TermKind kind;
  Span span;
  int index = -1;
  std::string name;
  std::vector<std::string> binders;
  std::vector<TermPtr> args;
  shape::Tope shape;
  std::vector<Clause> clauses;
  std::vector<shape::Point> points;
};

TermPtr make_var(int index, Span span = {});
TermPtr make_global(std::string name, Span span = {});
TermPtr make_term(TermKind kind, Span span, std::vector<TermPtr> args = {}, std::string name = {});

// Structural equality on nameless terms (binder names and spans ignored).
bool term_equal(const Term& a, const Term& b);

}  // namespace sctt::kernel
