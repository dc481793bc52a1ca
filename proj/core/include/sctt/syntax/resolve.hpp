#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sctt/kernel/term.hpp"
#include "sctt/syntax/surface.hpp"

namespace sctt::syntax {

enum class GlobalKind { Def, Postulate };

// Names declared so far, in declaration order.
struct GlobalScope {
  std::map<std::string, GlobalKind> names;

  bool contains(const std::string& n) const { return names.count(n) != 0; }
};

// A declaration whose parameters have been folded into its type and body
// (type-layer parameters become Pi/lambda binders, a run of cube parameters
// with its tope parameters becomes an extension binder).
struct ResolvedDecl {
  DeclKind kind;
  std::string name;
  Span span;
  Span name_span;
  kernel::TermPtr type;
  kernel::TermPtr body;                 // null for postulates
  std::set<std::string> references;     // globals used directly
};

// Throws Error(UnboundName | DuplicateDeclaration | LayerMismatch).
ResolvedDecl resolve_declaration(const Declaration& decl, const GlobalScope& scope);

// Resolves a whole module, extending `scope` as it goes. Stops at the first
// error.
std::vector<ResolvedDecl> resolve_names(const std::vector<Declaration>& decls, GlobalScope& scope);

kernel::TermPtr resolve_term(const SurfaceTerm& term, const GlobalScope& scope,
                             std::set<std::string>* references = nullptr);

// Tope formulas over the named cube variables, for the CLI solver.
shape::Tope resolve_tope(const SurfaceTerm& term, const std::vector<std::string>& cube_names);

// Back to concrete syntax, choosing binder names that do not capture.
// `scope` names the free variables, outermost first.
SurfacePtr to_surface(const kernel::Term& term, const std::vector<std::string>& scope = {});

}  // namespace sctt::syntax
