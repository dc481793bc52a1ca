#include "sctt/kernel/term.hpp"

namespace sctt::kernel {

TermPtr make_var(int index, Span span) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Var;
  t->span = span;
  t->index = index;
  return t;
}

TermPtr make_global(std::string name, Span span) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Global;
  t->span = span;
  t->name = std::move(name);
  return t;
}

TermPtr make_term(TermKind kind, Span span, std::vector<TermPtr> args, std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = kind;
  t->span = span;
  t->args = std::move(args);
  t->name = std::move(name);
  return t;
}

bool term_equal(const Term& a, const Term& b) {
  if (&a == &b) return true;
  if (a.kind != b.kind || a.args.size() != b.args.size() || a.clauses.size() != b.clauses.size() ||
      a.points != b.points || a.binders.size() != b.binders.size())
    return false;
  switch (a.kind) {
    case TermKind::Var:
      if (a.index != b.index) return false;
      break;
    case TermKind::Global:
      if (a.name != b.name) return false;
      break;
    case TermKind::ExtType:
      if (!(a.shape == b.shape)) return false;
      break;
    default: break;
  }
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!term_equal(*a.args[i], *b.args[i])) return false;
  for (std::size_t i = 0; i < a.clauses.size(); ++i)
    if (!(a.clauses[i].tope == b.clauses[i].tope) || !term_equal(*a.clauses[i].body, *b.clauses[i].body)) return false;
  return true;
}

}  // namespace sctt::kernel
