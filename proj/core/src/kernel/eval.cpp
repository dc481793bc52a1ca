#include <stdexcept>

#include "sctt/kernel/kernel.hpp"

namespace sctt::kernel {

Env Env::push(Val v) const {
  Env e;
  e.head_ = std::make_shared<const Node>(Node{std::move(v), head_});
  e.size_ = size_ + 1;
  return e;
}

const Val& Env::at(int index) const {
  const Node* n = head_.get();
  for (int i = 0; i < index && n; ++i) n = n->next.get();
  if (!n || index < 0) throw std::logic_error("ill-scoped term: index " + std::to_string(index));
  return n->value;
}

Val make_value(VKind kind) {
  auto v = std::make_shared<Value>();
  v->kind = kind;
  return v;
}

Val vuniverse() {
  static const Val u = make_value(VKind::Universe);
  return u;
}

Val vrefl() {
  static const Val r = make_value(VKind::Refl);
  return r;
}

Val vpoint(shape::Point p) {
  auto v = std::make_shared<Value>();
  v->kind = VKind::Point;
  v->point = p;
  return v;
}

Val vneutral(NeuPtr n) {
  auto v = std::make_shared<Value>();
  v->kind = VKind::Neutral;
  v->neutral = std::move(n);
  return v;
}

Val vvar(int level) {
  auto n = std::make_shared<Neutral>();
  n->kind = NKind::Var;
  n->level = level;
  return vneutral(n);
}

Val vglobal(const std::string& name) {
  auto n = std::make_shared<Neutral>();
  n->kind = NKind::Global;
  n->name = name;
  return vneutral(n);
}

shape::Point point_to_level(const Env& env, const shape::Point& p) {
  if (!p.is_var()) return p;
  const Val& v = env.at(p.var);
  if (v->kind != VKind::Point) throw std::logic_error("cube index bound to a non-point");
  return v->point;
}

shape::Tope tope_to_levels(const Env& env, const shape::Tope& phi) {
  return phi.map_points([&](const shape::Point& p) { return point_to_level(env, p); });
}

shape::Tope tope_to_indices(int depth, const shape::Tope& phi) {
  return phi.map_points([&](const shape::Point& p) {
    return p.is_var() ? shape::Point::variable(depth - 1 - p.var) : p;
  });
}

namespace {

// Truth of a tope with no variables left (0 < 1 is the only model).
bool closed_valid(const shape::Tope& phi) {
  if (!phi.variables().empty()) return false;
  const shape::WeakOrder m{{}, 1};
  return shape::eval_tope(m, phi);
}

Val with_clauses(std::vector<VClause> clauses) {
  auto v = std::make_shared<Value>();
  v->kind = VKind::RecOr;
  v->clauses = std::move(clauses);
  return v;
}

}  // namespace

// \p -> first p
TermPtr eta_projection(TermKind kind) {
  static const TermPtr fst =
      make_term(TermKind::Lambda, {}, {make_term(TermKind::First, {}, {make_var(0)})}, "p");
  static const TermPtr snd =
      make_term(TermKind::Lambda, {}, {make_term(TermKind::Second, {}, {make_var(0)})}, "p");
  return kind == TermKind::First ? fst : snd;
}

namespace {

[[noreturn]] void bad_elimination(const char* what) {
  throw Error(ErrorCode::TypeMismatch, std::string("ill-typed ") + what + " (reachable only under contradictory topes)",
              Span{});
}

}  // namespace

Val Kernel::eval(const Env& env, const TermPtr& t) const {
  switch (t->kind) {
    case TermKind::Var: return env.at(t->index);
    case TermKind::Global: {
      const GlobalEntry* g = lookup(t->name);
      if (!g) throw std::logic_error("unknown global '" + t->name + "'");
      if (g->status == GlobalStatus::Defined) return g->value;
      return vglobal(t->name);
    }
    case TermKind::Universe: return vuniverse();
    case TermKind::Pi:
    case TermKind::Sigma: {
      auto v = std::make_shared<Value>();
      v->kind = t->kind == TermKind::Pi ? VKind::Pi : VKind::Sigma;
      v->name = t->name;
      v->a = eval(env, t->args[0]);
      v->closure = {env, t->args[1]};
      return v;
    }
    case TermKind::Lambda: {
      auto v = std::make_shared<Value>();
      v->kind = VKind::Lambda;
      v->name = t->name;
      v->closure = {env, t->args[0]};
      return v;
    }
    case TermKind::App: return apply(eval(env, t->args[0]), eval(env, t->args[1]));
    case TermKind::Pair: {
      auto v = std::make_shared<Value>();
      v->kind = VKind::Pair;
      v->a = eval(env, t->args[0]);
      v->b = eval(env, t->args[1]);
      return v;
    }
    case TermKind::First:
    case TermKind::Second:
      if (t->args.empty()) return eval(env, eta_projection(t->kind));
      return t->kind == TermKind::First ? first(eval(env, t->args[0])) : second(eval(env, t->args[0]));
    case TermKind::Id: {
      auto v = std::make_shared<Value>();
      v->kind = VKind::Id;
      v->a = eval(env, t->args[0]);
      v->b = eval(env, t->args[1]);
      v->c = eval(env, t->args[2]);
      return v;
    }
    case TermKind::Refl: return vrefl();
    case TermKind::IdJ: {
      std::vector<Val> m;
      for (std::size_t i = 0; i < 5; ++i) m.push_back(eval(env, t->args[i]));
      return idj(m, eval(env, t->args[5]));
    }
    case TermKind::ExtType:
    case TermKind::ExtLambda: {
      auto v = std::make_shared<Value>();
      v->kind = t->kind == TermKind::ExtType ? VKind::ExtType : VKind::ExtLambda;
      v->closure = {env, t};
      return v;
    }
    case TermKind::ExtApp: {
      std::vector<shape::Point> pts;
      for (const auto& p : t->points) pts.push_back(point_to_level(env, p));
      return ext_apply(eval(env, t->args[0]), pts);
    }
    case TermKind::RecOr: {
      std::vector<VClause> cs;
      for (const auto& c : t->clauses) {
        auto phi = tope_to_levels(env, c.tope);
        if (closed_valid(phi)) return eval(env, c.body);
        cs.push_back({phi, eval(env, c.body)});
      }
      return with_clauses(std::move(cs));
    }
    case TermKind::Annot: return eval(env, t->args[0]);
    case TermKind::Hole: throw std::logic_error("evaluating a hole");
  }
  throw std::logic_error("unknown term kind");
}

Val Kernel::instantiate(const Closure& c, const Val& arg) const { return eval(c.env.push(arg), c.term); }

Val Kernel::apply(const Val& f, const Val& arg) const {
  switch (f->kind) {
    case VKind::Lambda: return instantiate(f->closure, arg);
    case VKind::Neutral: {
      auto n = std::make_shared<Neutral>();
      n->kind = NKind::App;
      n->head = f->neutral;
      n->arg = arg;
      return vneutral(n);
    }
    case VKind::RecOr: {
      std::vector<VClause> cs;
      for (const auto& c : f->clauses) cs.push_back({c.tope, apply(c.body, arg)});
      return with_clauses(std::move(cs));
    }
    default: bad_elimination("application");
  }
}

Val Kernel::first(const Val& p) const {
  switch (p->kind) {
    case VKind::Pair: return p->a;
    case VKind::Neutral: {
      auto n = std::make_shared<Neutral>();
      n->kind = NKind::First;
      n->head = p->neutral;
      return vneutral(n);
    }
    case VKind::RecOr: {
      std::vector<VClause> cs;
      for (const auto& c : p->clauses) cs.push_back({c.tope, first(c.body)});
      return with_clauses(std::move(cs));
    }
    default: bad_elimination("projection");
  }
}

Val Kernel::second(const Val& p) const {
  switch (p->kind) {
    case VKind::Pair: return p->b;
    case VKind::Neutral: {
      auto n = std::make_shared<Neutral>();
      n->kind = NKind::Second;
      n->head = p->neutral;
      return vneutral(n);
    }
    case VKind::RecOr: {
      std::vector<VClause> cs;
      for (const auto& c : p->clauses) cs.push_back({c.tope, second(c.body)});
      return with_clauses(std::move(cs));
    }
    default: bad_elimination("projection");
  }
}

Val Kernel::ext_apply(const Val& e, const std::vector<shape::Point>& points) const {
  switch (e->kind) {
    case VKind::ExtLambda: {
      Env env = e->closure.env;
      for (const auto& p : points) env = env.push(vpoint(p));
      return eval(env, e->closure.term->args[0]);
    }
    case VKind::Neutral: {
      auto n = std::make_shared<Neutral>();
      n->kind = NKind::ExtApp;
      n->head = e->neutral;
      n->points = points;
      return vneutral(n);
    }
    case VKind::RecOr: {
      std::vector<VClause> cs;
      for (const auto& c : e->clauses) cs.push_back({c.tope, ext_apply(c.body, points)});
      return with_clauses(std::move(cs));
    }
    default: bad_elimination("extension application");
  }
}

Val Kernel::idj(const std::vector<Val>& m, const Val& path) const {
  switch (path->kind) {
    case VKind::Refl: return apply(m[3], m[1]);
    case VKind::Neutral: {
      auto n = std::make_shared<Neutral>();
      n->kind = NKind::J;
      n->motive = m;
      n->head = path->neutral;
      return vneutral(n);
    }
    case VKind::RecOr: {
      std::vector<VClause> cs;
      for (const auto& c : path->clauses) cs.push_back({c.tope, idj(m, c.body)});
      return with_clauses(std::move(cs));
    }
    default: bad_elimination("path induction");
  }
}

ExtInstance Kernel::instantiate_ext(const Val& ext, const std::vector<shape::Point>& points) const {
  const Term& t = *ext->closure.term;
  Env env = ext->closure.env;
  for (const auto& p : points) env = env.push(vpoint(p));
  ExtInstance out{tope_to_levels(env, t.shape), eval(env, t.args[0]), {}};
  for (const auto& c : t.clauses) out.clauses.push_back({tope_to_levels(env, c.tope), eval(env, c.body)});
  return out;
}

}  // namespace sctt::kernel
