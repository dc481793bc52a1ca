#include <gtest/gtest.h>

#include "sctt/syntax/resolve.hpp"

using namespace sctt;
using namespace sctt::syntax;

namespace {

std::vector<ResolvedDecl> resolve(std::string_view src) {
  GlobalScope scope;
  return resolve_names(parse_module(tokenize(src)), scope);
}

Error resolve_error(std::string_view src) {
  try {
    resolve(src);
  } catch (const Error& e) {
    return e;
  }
  return Error(ErrorCode{}, "no error", {});
}

}  // namespace

TEST(Resolve, UnboundName) {
  const std::string src = "def k : U := A ;";
  auto e = resolve_error(src);
  EXPECT_EQ(e.code(), ErrorCode::UnboundName);
  EXPECT_EQ(src.substr(e.span().start, e.span().end - e.span().start), "A");
}

TEST(Resolve, NoForwardReferences) {
  const std::string src = "def a : U := b ; def b : U := a ;";
  auto e = resolve_error(src);
  EXPECT_EQ(e.code(), ErrorCode::UnboundName);
  EXPECT_EQ(e.span().start, src.find('b'));
}

TEST(Resolve, InnermostBinderWins) {
  auto ds = resolve("def k (A : U) : A -> A -> A := \\a -> \\a -> a ;");
  // \A -> \a -> \a -> #0
  const auto& body = ds[0].body;
  const auto& inner = body->args[0]->args[0]->args[0];
  EXPECT_EQ(inner->kind, kernel::TermKind::Var);
  EXPECT_EQ(inner->index, 0);
}

TEST(Resolve, DuplicateDeclaration) {
  EXPECT_EQ(resolve_error("postulate A : U ; postulate A : U ;").code(), ErrorCode::DuplicateDeclaration);
}

TEST(Resolve, LayerMismatch) {
  EXPECT_EQ(resolve_error("def f (i : 2) : U := i ;").code(), ErrorCode::LayerMismatch);
  EXPECT_EQ(resolve_error("def f : U := (t : 2) -> U ;").code(), ErrorCode::LayerMismatch);
  EXPECT_EQ(resolve_error("def f (A : U) [TOP] : U := A ;").code(), ErrorCode::LayerMismatch);
  // A type variable cannot stand for an interval point.
  EXPECT_EQ(resolve_error("def f (A : U) (e : <{t : 2 | TOP} -> A>) (x : A) : A := e @ (x) ;").code(),
            ErrorCode::LayerMismatch);
}

TEST(Resolve, ParametersFold) {
  auto ds = resolve("def f (A : U) (t s : 2) [s <= t] : U := A ;");
  const auto& ty = ds[0].type;
  ASSERT_EQ(ty->kind, kernel::TermKind::Pi);
  const auto& ext = ty->args[1];
  ASSERT_EQ(ext->kind, kernel::TermKind::ExtType);
  EXPECT_EQ(ext->binders.size(), 2u);
  EXPECT_EQ(ext->shape.kind(), shape::TopeKind::Leq);
  EXPECT_EQ(ds[0].body->args[0]->kind, kernel::TermKind::ExtLambda);
}

TEST(Resolve, RecordsReferences) {
  auto ds = resolve("postulate A : U ; postulate a : A ; def b : A := a ;");
  EXPECT_EQ(ds[2].references, (std::set<std::string>{"A", "a"}));
}

TEST(Resolve, ReifyAvoidsCapture) {
  GlobalScope scope;
  scope.names["x"] = GlobalKind::Postulate;
  // \y -> x, with the bound variable printed under a name that is free here.
  auto t = resolve_term(*parse_term(tokenize("\\x' -> \\x -> x'")), scope);
  auto printed = pretty_print(*to_surface(*t));
  auto back = resolve_term(*parse_term(tokenize(printed)), scope);
  EXPECT_TRUE(kernel::term_equal(*t, *back)) << printed;
}

TEST(Resolve, ReifyRoundtripsLibraryTerms) {
  const std::string src =
      "def hom (A : U) (x y : A) : U := <{t : 2 | TOP} -> A [t === 0 |-> x, t === 1 |-> y]> ;"
      "def k (A : U) (x : A) : hom A x x := \\{t} -> recOR(t <= 0 |-> x, 0 <= t |-> x) ;";
  GlobalScope scope;
  for (const auto& d : resolve_names(parse_module(tokenize(src)), scope)) {
    for (const auto& t : {d.type, d.body}) {
      auto printed = pretty_print(*to_surface(*t));
      auto back = resolve_term(*parse_term(tokenize(printed)), scope);
      EXPECT_TRUE(kernel::term_equal(*t, *back)) << printed;
    }
  }
}
