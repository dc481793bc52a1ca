#include <stdexcept>

#include "sctt/kernel/kernel.hpp"
#include "sctt/syntax/resolve.hpp"

namespace sctt::kernel {

// ---- axiom table -----------------------------------------------------------

void AxiomTable::add_axiom(const std::string& name, Val type) {
  types_[name] = std::move(type);
  dependents_[name];
}

void AxiomTable::record(const std::string& decl, const std::set<std::string>& axioms) {
  for (const auto& a : axioms) dependents_[a].insert(decl);
}

const std::set<std::string>& AxiomTable::dependents(const std::string& axiom) const {
  static const std::set<std::string> none;
  auto it = dependents_.find(axiom);
  return it == dependents_.end() ? none : it->second;
}

std::vector<std::string> AxiomTable::axioms() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : types_) out.push_back(name);
  return out;
}

// ---- globals ---------------------------------------------------------------

const GlobalEntry* Kernel::lookup(const std::string& name) const {
  auto it = globals_.find(name);
  return it == globals_.end() ? nullptr : &it->second;
}

syntax::GlobalScope Kernel::scope() const {
  syntax::GlobalScope s;
  for (const auto& [name, g] : globals_)
    s.names[name] = g.status == GlobalStatus::Postulate ? syntax::GlobalKind::Postulate : syntax::GlobalKind::Def;
  return s;
}

std::set<std::string> Kernel::dependencies(const std::set<std::string>& references) const {
  std::set<std::string> out;
  for (const auto& r : references) {
    const GlobalEntry* g = lookup(r);
    if (!g) continue;
    if (g->status == GlobalStatus::Postulate) out.insert(r);
    out.insert(g->axioms.begin(), g->axioms.end());
  }
  return out;
}

// ---- diagnostics -----------------------------------------------------------

namespace {

std::string clip(std::string s) {
  constexpr std::size_t kMax = 240;
  if (s.size() > kMax) s = s.substr(0, kMax) + " ...";
  return s;
}

}  // namespace

std::string Kernel::show(const TeleContext& ctx, const Val& type, const Val& v) const {
  try {
    return clip(syntax::pretty_print(*syntax::to_surface(*quote(ctx, type, v), ctx.names())));
  } catch (const std::exception&) {
    return "<unprintable>";
  }
}

std::string Kernel::show_type(const TeleContext& ctx, const Val& type) const {
  try {
    return clip(syntax::pretty_print(*syntax::to_surface(*quote_type(ctx, type), ctx.names())));
  } catch (const std::exception&) {
    return "<unprintable>";
  }
}

namespace {

const char* shape_of(VKind k) {
  switch (k) {
    case VKind::Pi: return "a function type";
    case VKind::Sigma: return "a pair type";
    case VKind::Id: return "an identity type";
    case VKind::ExtType: return "an extension type";
    case VKind::Universe: return "the universe";
    default: return "a type";
  }
}

}  // namespace

// ---- checking --------------------------------------------------------------

void Kernel::check(const TeleContext& ctx, const TermPtr& t, const Val& type) const {
  Val ty = force(ctx, type);
  auto expect = [&](VKind k) {
    if (ty->kind != k)
      throw Error(ErrorCode::TypeMismatch,
                  std::string("expected ") + shape_of(k) + " for this term, but the goal is " + show_type(ctx, ty),
                  t->span);
  };
  switch (t->kind) {
    case TermKind::Lambda: {
      expect(VKind::Pi);
      TeleContext inner = ctx.bind(t->name, ty->a);
      check(inner, t->args[0], instantiate(ty->closure, vvar(ctx.depth())));
      return;
    }
    case TermKind::Pair: {
      expect(VKind::Sigma);
      check(ctx, t->args[0], ty->a);
      check(ctx, t->args[1], instantiate(ty->closure, eval(ctx.env(), t->args[0])));
      return;
    }
    case TermKind::Refl: {
      expect(VKind::Id);
      if (!conv(ctx, ty->a, ty->b, ty->c))
        throw Error(ErrorCode::ReflMismatch,
                    "refl needs equal endpoints, but " + show(ctx, ty->a, ty->b) + " and " + show(ctx, ty->a, ty->c) +
                        " are not definitionally equal",
                    t->span);
      return;
    }
    case TermKind::ExtLambda: {
      expect(VKind::ExtType);
      const auto& want = ty->closure.term->binders;
      if (want.size() != t->binders.size())
        throw Error(ErrorCode::TypeMismatch,
                    "extension lambda binds " + std::to_string(t->binders.size()) + " cube variables, the type expects " +
                        std::to_string(want.size()),
                    t->span);
      TeleContext inner = ctx.bind_cube(t->binders, options_.cube_cap, t->span);
      auto pts = inner.last_points(t->binders.size());
      ExtInstance inst = instantiate_ext(ty, pts);
      TeleContext in_shape = inner.assume(inst.shape);
      check(in_shape, t->args[0], inst.body);
      Val body = eval(in_shape.env(), t->args[0]);
      for (const auto& c : inst.clauses) {
        TeleContext on = in_shape.assume(c.tope);
        if (!conv(on, inst.body, body, c.body))
          throw Error(ErrorCode::ExtensionBoundaryMismatch,
                      "on the boundary " + c.tope.to_string([&](int l) { return inner.names().at(l); }) + " the body is " +
                          show(on, inst.body, body) + " but the type requires " + show(on, inst.body, c.body),
                      t->args[0]->span);
      }
      return;
    }
    case TermKind::RecOr: {
      std::vector<shape::Tope> topes;
      shape::Tope cover = shape::Tope::bot();
      for (const auto& c : t->clauses) {
        topes.push_back(tope_to_levels(ctx.env(), c.tope));
        cover = cover.kind() == shape::TopeKind::Bot ? topes.back() : shape::Tope::disj(cover, topes.back());
      }
      if (!ctx.entails(cover)) {
        auto counter = ctx.refute(cover);
        throw Error(ErrorCode::TopeUnsatisfied,
                    "the cases of recOR do not cover the context" + (counter ? "; uncovered: " + *counter : ""), t->span,
                    counter);
      }
      std::vector<Val> bodies;
      for (std::size_t i = 0; i < t->clauses.size(); ++i) {
        TeleContext on = ctx.assume(topes[i]);
        check(on, t->clauses[i].body, ty);
        bodies.push_back(eval(on.env(), t->clauses[i].body));
      }
      for (std::size_t i = 0; i < bodies.size(); ++i)
        for (std::size_t j = i + 1; j < bodies.size(); ++j) {
          TeleContext both = ctx.assume(shape::Tope::conj(topes[i], topes[j]));
          if (!conv(both, ty, bodies[i], bodies[j]))
            throw Error(ErrorCode::ExtensionBoundaryMismatch,
                        "recOR cases " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                            " disagree where they overlap",
                        t->clauses[j].body->span);
        }
      return;
    }
    case TermKind::Hole:
      throw Error(ErrorCode::TypeMismatch, "unfilled hole of type " + show_type(ctx, ty), t->span);
    case TermKind::First:
    case TermKind::Second:
      if (t->args.empty()) {
        if (ty->kind != VKind::Pi)
          throw Error(ErrorCode::NotInferable,
                      "cannot infer the type of an unapplied projection; it needs a pair argument", t->span);
        auto eta = std::make_shared<Term>(*eta_projection(t->kind));
        eta->span = t->span;
        check(ctx, eta, ty);
        return;
      }
      [[fallthrough]];
    default: {
      Val actual = infer(ctx, t);
      if (!conv_type(ctx, actual, ty))
        throw Error(ErrorCode::TypeMismatch,
                    "type mismatch: expected " + show_type(ctx, ty) + ", found " + show_type(ctx, actual), t->span);
    }
  }
}

Val Kernel::infer(const TeleContext& ctx, const TermPtr& t) const {
  const Val u = vuniverse();
  switch (t->kind) {
    case TermKind::Var: {
      const int level = ctx.depth() - 1 - t->index;
      if (ctx.is_cube(level))
        throw Error(ErrorCode::LayerMismatch, "cube variable used where a term is required", t->span);
      return ctx.type_of(level);
    }
    case TermKind::Global: {
      const GlobalEntry* g = lookup(t->name);
      if (!g) throw Error(ErrorCode::UnboundName, "unbound name '" + t->name + "'", t->span);
      return g->type;
    }
    case TermKind::Universe: return u;
    case TermKind::Pi:
    case TermKind::Sigma: {
      check(ctx, t->args[0], u);
      Val dom = eval(ctx.env(), t->args[0]);
      check(ctx.bind(t->name, dom), t->args[1], u);
      return u;
    }
    case TermKind::Id: {
      check(ctx, t->args[0], u);
      Val a = eval(ctx.env(), t->args[0]);
      check(ctx, t->args[1], a);
      check(ctx, t->args[2], a);
      return u;
    }
    case TermKind::ExtType: {
      TeleContext inner = ctx.bind_cube(t->binders, options_.cube_cap, t->span);
      TeleContext in_shape = inner.assume(tope_to_levels(inner.env(), t->shape));
      check(in_shape, t->args[0], u);
      Val body = eval(in_shape.env(), t->args[0]);
      std::vector<shape::Tope> topes;
      std::vector<Val> values;
      for (const auto& c : t->clauses) {
        topes.push_back(tope_to_levels(inner.env(), c.tope));
        TeleContext on = in_shape.assume(topes.back());
        check(on, c.body, body);
        values.push_back(eval(on.env(), c.body));
      }
      for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j) {
          TeleContext both = in_shape.assume(shape::Tope::conj(topes[i], topes[j]));
          if (!conv(both, body, values[i], values[j]))
            throw Error(ErrorCode::ExtensionBoundaryMismatch,
                        "boundary clauses " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                            " disagree where they overlap: " + show(both, body, values[i]) + " vs " +
                            show(both, body, values[j]),
                        t->clauses[j].body->span);
        }
      return u;
    }
    case TermKind::App: {
      const TermPtr& fn = t->args[0];
      if (fn->kind == TermKind::Lambda) {
        // A redex: type the body at the argument's type, then substitute.
        Val a = infer(ctx, t->args[1]);
        TeleContext inner = ctx.bind(fn->name, a);
        Val body_ty = infer(inner, fn->args[0]);
        TermPtr quoted = quote_type(inner, body_ty);
        return eval(ctx.env().push(eval(ctx.env(), t->args[1])), quoted);
      }
      Val f = force(ctx, infer(ctx, fn));
      if (f->kind != VKind::Pi)
        throw Error(ErrorCode::TypeMismatch, "applying a term of type " + show_type(ctx, f) + ", which is not a function",
                    fn->span);
      check(ctx, t->args[1], f->a);
      return instantiate(f->closure, eval(ctx.env(), t->args[1]));
    }
    case TermKind::First:
    case TermKind::Second: {
      if (t->args.empty())
        throw Error(ErrorCode::NotInferable,
                    "cannot infer the type of an unapplied projection; it needs a pair argument", t->span);
      Val p = force(ctx, infer(ctx, t->args[0]));
      if (p->kind != VKind::Sigma)
        throw Error(ErrorCode::TypeMismatch, "projecting from a term of type " + show_type(ctx, p) + ", which is not a pair type",
                    t->args[0]->span);
      if (t->kind == TermKind::First) return p->a;
      return instantiate(p->closure, first(eval(ctx.env(), t->args[0])));
    }
    case TermKind::IdJ: {
      const auto& a = t->args;
      check(ctx, a[0], u);
      Val A = eval(ctx.env(), a[0]);
      check(ctx, a[1], A);
      check(ctx, a[2], j_motive_type(A));
      Val C = eval(ctx.env(), a[2]);
      check(ctx, a[3], j_base_type(A, C));
      check(ctx, a[4], A);
      Val x = eval(ctx.env(), a[1]), y = eval(ctx.env(), a[4]);
      auto id = make_value(VKind::Id);
      auto& idm = const_cast<Value&>(*id);
      idm.a = A;
      idm.b = x;
      idm.c = y;
      check(ctx, a[5], id);
      return apply(apply(apply(C, x), y), eval(ctx.env(), a[5]));
    }
    case TermKind::ExtApp: {
      Val e = force(ctx, infer(ctx, t->args[0]));
      if (e->kind != VKind::ExtType)
        throw Error(ErrorCode::TypeMismatch,
                    "applying a term of type " + show_type(ctx, e) + " to cube points; it is not an extension type",
                    t->args[0]->span);
      const std::size_t arity = e->closure.term->binders.size();
      if (arity != t->points.size())
        throw Error(ErrorCode::TypeMismatch,
                    "extension type expects " + std::to_string(arity) + " points, got " + std::to_string(t->points.size()),
                    t->span);
      std::vector<shape::Point> pts;
      for (const auto& p : t->points) pts.push_back(point_to_level(ctx.env(), p));
      ExtInstance inst = instantiate_ext(e, pts);
      if (!ctx.entails(inst.shape)) {
        auto counter = ctx.refute(inst.shape);
        throw Error(ErrorCode::TopeUnsatisfied,
                    "point outside the shape " +
                        inst.shape.to_string([&](int l) { return ctx.names().at(static_cast<std::size_t>(l)); }) +
                        (counter ? "; refuted by " + *counter : ""),
                    t->span, counter);
      }
      return inst.body;
    }
    case TermKind::Annot: {
      check(ctx, t->args[1], u);
      Val ty = eval(ctx.env(), t->args[1]);
      check(ctx, t->args[0], ty);
      return ty;
    }
    case TermKind::Lambda:
      throw Error(ErrorCode::NotInferable, "cannot infer the type of a lambda; annotate it", t->span);
    case TermKind::Pair: throw Error(ErrorCode::NotInferable, "cannot infer the type of a pair; annotate it", t->span);
    case TermKind::Refl: throw Error(ErrorCode::NotInferable, "cannot infer the type of refl; annotate it", t->span);
    case TermKind::ExtLambda:
      throw Error(ErrorCode::NotInferable, "cannot infer the type of an extension lambda; annotate it", t->span);
    case TermKind::RecOr: throw Error(ErrorCode::NotInferable, "cannot infer the type of recOR; annotate it", t->span);
    case TermKind::Hole: throw Error(ErrorCode::TypeMismatch, "unfilled hole", t->span);
  }
  throw std::logic_error("unknown term kind");
}

TermPtr Kernel::normalize(const TeleContext& ctx, const TermPtr& t, const Val& type) const {
  check(ctx, t, type);
  return quote(ctx, type, eval(ctx.env(), t));
}

// ---- declarations ----------------------------------------------------------

void Kernel::check_declaration(const syntax::ResolvedDecl& d) {
  const std::string label = d.kind == syntax::DeclKind::Check ? "#check" : "'" + d.name + "'";
  auto wrapped = [&](const Error& e) {
    return Error(e.code(), "in " + label + ": " + e.what(), e.span(), e.counter_model());
  };
  auto guarded = [&](auto&& body) {
    try {
      body();
    } catch (const Error& e) {
      throw wrapped(e);
    } catch (const std::logic_error& e) {
      throw Error(ErrorCode::TypeMismatch, "in " + label + ": " + e.what(), d.span);
    }
  };

  const TeleContext root;
  guarded([&] { check(root, d.type, vuniverse()); });
  Val type = eval(root.env(), d.type);
  const auto axioms = dependencies(d.references);

  if (d.kind == syntax::DeclKind::Check) {
    guarded([&] { check(root, d.body, type); });
    return;
  }

  GlobalEntry entry{d.name, GlobalStatus::Postulate, d.type, d.body, type, nullptr, axioms};
  if (d.kind == syntax::DeclKind::Postulate) {
    entry.axioms.insert(d.name);
    axioms_.add_axiom(d.name, type);
    axioms_.record(d.name, entry.axioms);
    globals_.emplace(d.name, std::move(entry));
    order_.push_back(d.name);
    return;
  }

  try {
    guarded([&] { check(root, d.body, type); });
  } catch (...) {
    entry.status = GlobalStatus::Opaque;
    axioms_.record(d.name, entry.axioms);
    globals_.emplace(d.name, std::move(entry));
    order_.push_back(d.name);
    throw;
  }
  entry.status = GlobalStatus::Defined;
  entry.value = eval(root.env(), d.body);
  axioms_.record(d.name, entry.axioms);
  globals_.emplace(d.name, std::move(entry));
  order_.push_back(d.name);
}

}  // namespace sctt::kernel
