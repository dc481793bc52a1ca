#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sctt/diagnostics.hpp"
#include "sctt/syntax/token.hpp"

namespace sctt::syntax {

enum class SurfaceKind {
  Var,
  Universe,
  Pi,      // name, [domain, codomain]; empty name = non-dependent arrow
  Lambda,  // name, [body]
  App,     // [fn, arg]
  Sigma,   // name, [first, second]; empty name = non-dependent product
  Pair,    // [first, second]
  First,   // [pair], or [] for the bare projection
  Second,  // [pair], or []
  Id,      // [type, lhs, rhs]
  Refl,
  IdJ,        // [type, base, motive, refl_case, target, path]
  Cube2,      // the directed interval "2"
  Endpoint,   // name "0" | "1"
  TopeAtom,   // name "TOP" | "BOT" | "<=" | "===", binary atoms have [lhs, rhs]
  TopeConn,   // name "/\" | "\/", [lhs, rhs]
  ShapeType,  // binders, [tope]: "{t s : 2 * 2 | tope}"
  ExtensionType,  // [ShapeType, body, (tope, term)*]
  ExtLambda,      // binders, [body]
  ExtApp,         // [fn, point+]
  RecOr,          // [(tope, term)+]
  Annot,          // [term, type]
  Hole,
};

struct SurfaceTerm;
using SurfacePtr = std::shared_ptr<const SurfaceTerm>;

struct SurfaceTerm {
  SurfaceKind kind;
  Span span;
  std::string name;
  std::vector<std::string> binders;
  std::vector<SurfacePtr> children;
};

SurfacePtr make_surface(SurfaceKind kind, Span span, std::string name = {}, std::vector<SurfacePtr> children = {},
                        std::vector<std::string> binders = {});

enum class Layer { Cube, Tope, Type };

struct Param {
  std::string name;  // empty for tope-layer parameters
  Layer layer;
  SurfacePtr annotation;  // type, or tope formula; null for cube layer
  Span span;
};

enum class DeclKind { Def, Postulate, Check };

struct Declaration {
  DeclKind kind;
  std::string name;  // empty for #check
  Span name_span;
  std::vector<Param> params;
  SurfacePtr type;
  SurfacePtr body;  // null for postulates
  Span span;
};

std::vector<Declaration> parse_module(const std::vector<Token>& tokens);
SurfacePtr parse_term(const std::vector<Token>& tokens);

// "x1 ... xn |- HYP => GOAL"
struct Sequent {
  std::vector<std::string> variables;
  SurfacePtr hypothesis;
  SurfacePtr goal;
};
Sequent parse_sequent(const std::vector<Token>& tokens);

// Minimal-parenthesis rendering in the concrete syntax.
std::string pretty_print(const SurfaceTerm& term);
std::string pretty_print(const Declaration& decl);

// Equality up to renaming of bound variables; spans are ignored.
bool alpha_equal(const SurfaceTerm& a, const SurfaceTerm& b);

}  // namespace sctt::syntax
