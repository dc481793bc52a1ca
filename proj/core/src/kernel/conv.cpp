#include <stdexcept>

#include "sctt/kernel/kernel.hpp"

namespace sctt::kernel {

namespace {

TermPtr with_binders(TermKind kind, Span span, std::vector<std::string> binders, std::vector<TermPtr> args) {
  auto t = std::make_shared<Term>();
  t->kind = kind;
  t->span = span;
  t->binders = std::move(binders);
  t->args = std::move(args);
  return t;
}

const std::vector<std::string>& ext_binders(const Val& v) { return v->closure.term->binders; }

}  // namespace

// ---- forcing ---------------------------------------------------------------

Val Kernel::force(const TeleContext& ctx, const Val& v) const {
  Val cur = v;
  for (;;) {
    if (cur->kind == VKind::RecOr) {
      const VClause* hit = nullptr;
      for (const auto& c : cur->clauses)
        if (ctx.entails(c.tope)) {
          hit = &c;
          break;
        }
      if (!hit) {
        if (!ctx.decided()) ++blocked_;
        return cur;
      }
      cur = hit->body;
      continue;
    }
    if (cur->kind == VKind::Neutral) {
      Val r = force_neutral(ctx, *cur->neutral);
      if (!r) return cur;
      cur = r;
      continue;
    }
    return cur;
  }
}

Val Kernel::force_neutral(const TeleContext& ctx, const Neutral& n) const {
  switch (n.kind) {
    case NKind::Var:
    case NKind::Global: return nullptr;
    case NKind::App:
      if (Val h = force_neutral(ctx, *n.head)) return apply(h, n.arg);
      return nullptr;
    case NKind::First:
      if (Val h = force_neutral(ctx, *n.head)) return first(h);
      return nullptr;
    case NKind::Second:
      if (Val h = force_neutral(ctx, *n.head)) return second(h);
      return nullptr;
    case NKind::J:
      if (Val h = force_neutral(ctx, *n.head)) return idj(n.motive, h);
      return nullptr;
    case NKind::ExtApp: {
      if (Val h = force_neutral(ctx, *n.head)) return ext_apply(h, n.points);
      Val ty = neutral_type(ctx, *n.head);
      if (!ty) return nullptr;
      ty = force(ctx, ty);
      if (ty->kind != VKind::ExtType) return nullptr;
      ExtInstance inst = instantiate_ext(ty, n.points);
      for (const auto& c : inst.clauses)
        if (ctx.entails(c.tope)) return c.body;
      if (!inst.clauses.empty() && !ctx.decided()) ++blocked_;
      return nullptr;
    }
  }
  return nullptr;
}

Val Kernel::neutral_type(const TeleContext& ctx, const Neutral& n) const {
  switch (n.kind) {
    case NKind::Var:
      if (n.level < 0 || n.level >= ctx.depth()) return nullptr;
      return ctx.type_of(n.level);
    case NKind::Global: {
      const GlobalEntry* g = lookup(n.name);
      return g ? g->type : nullptr;
    }
    case NKind::J: return apply(apply(apply(n.motive[2], n.motive[1]), n.motive[4]), vneutral(n.head));
    default: break;
  }
  Val head = neutral_type(ctx, *n.head);
  if (!head) return nullptr;
  head = force(ctx, head);
  switch (n.kind) {
    case NKind::App: return head->kind == VKind::Pi ? instantiate(head->closure, n.arg) : nullptr;
    case NKind::First: return head->kind == VKind::Sigma ? head->a : nullptr;
    case NKind::Second:
      return head->kind == VKind::Sigma ? instantiate(head->closure, first(vneutral(n.head))) : nullptr;
    case NKind::ExtApp: return head->kind == VKind::ExtType ? instantiate_ext(head, n.points).body : nullptr;
    default: return nullptr;
  }
}

// ---- conversion ------------------------------------------------------------

Val Kernel::j_motive_type(const Val& a) const {
  // (x : A) -> (y : A) -> x =_{A} y -> U, with A at index 0
  static const TermPtr tmpl = [] {
    auto id = make_term(TermKind::Id, {}, {make_var(2), make_var(1), make_var(0)});
    auto inner = make_term(TermKind::Pi, {}, {id, make_term(TermKind::Universe, {})}, "p");
    auto y = make_term(TermKind::Pi, {}, {make_var(1), inner}, "y");
    return make_term(TermKind::Pi, {}, {make_var(0), y}, "x");
  }();
  return eval(Env{}.push(a), tmpl);
}

Val Kernel::j_base_type(const Val& a, const Val& motive) const {
  // (x : A) -> C x x refl, with C at index 0 and A at index 1
  static const TermPtr tmpl = [] {
    auto app = make_term(TermKind::App, {}, {make_var(1), make_var(0)});
    app = make_term(TermKind::App, {}, {app, make_var(0)});
    app = make_term(TermKind::App, {}, {app, make_term(TermKind::Refl, {})});
    return make_term(TermKind::Pi, {}, {make_var(1), app}, "x");
  }();
  return eval(Env{}.push(a).push(motive), tmpl);
}

bool Kernel::conv(const TeleContext& ctx, const Val& type, const Val& a, const Val& b) const {
  if (a == b || ctx.inconsistent()) return true;
  const std::size_t before = blocked_;
  if (conv_direct(ctx, type, a, b)) return true;
  if (blocked_ == before || ctx.decided()) return false;
  // Some reduction waited on a tope the context leaves open: decide by cases.
  for (const auto& c : ctx.split())
    if (!conv_direct(c, type, a, b)) return false;
  return true;
}

bool Kernel::conv_type(const TeleContext& ctx, const Val& a, const Val& b) const {
  if (a == b || ctx.inconsistent()) return true;
  const std::size_t before = blocked_;
  if (conv_type_direct(ctx, a, b)) return true;
  if (blocked_ == before || ctx.decided()) return false;
  for (const auto& c : ctx.split())
    if (!conv_type_direct(c, a, b)) return false;
  return true;
}

bool Kernel::conv_direct(const TeleContext& ctx, const Val& type, const Val& a, const Val& b) const {
  Val ty = force(ctx, type);
  switch (ty->kind) {
    case VKind::Pi: {
      TeleContext inner = ctx.bind(ty->name, ty->a);
      Val x = vvar(ctx.depth());
      return conv(inner, instantiate(ty->closure, x), apply(a, x), apply(b, x));
    }
    case VKind::Sigma: {
      Val a1 = first(a), b1 = first(b);
      return conv(ctx, ty->a, a1, b1) && conv(ctx, instantiate(ty->closure, a1), second(a), second(b));
    }
    case VKind::ExtType: {
      const auto& names = ext_binders(ty);
      TeleContext inner = ctx.bind_cube(names, options_.cube_cap, ty->closure.term->span);
      auto pts = inner.last_points(names.size());
      ExtInstance inst = instantiate_ext(ty, pts);
      return conv(inner.assume(inst.shape), inst.body, ext_apply(a, pts), ext_apply(b, pts));
    }
    case VKind::Universe: return conv_type(ctx, a, b);
    default: return conv_cases(ctx, ty, a, b, false);
  }
}

bool Kernel::conv_cases(const TeleContext& ctx, const Val& type, const Val& a, const Val& b, bool as_type) const {
  Val x = force(ctx, a), y = force(ctx, b);
  if (x == y) return true;
  auto same = [&](const TeleContext& c, const Val& l, const Val& r) {
    return as_type ? conv_type(c, l, r) : conv(c, type, l, r);
  };
  if (x->kind == VKind::RecOr) {
    for (const auto& c : x->clauses)
      if (!same(ctx.assume(c.tope), c.body, y)) return false;
    return true;
  }
  if (y->kind == VKind::RecOr) {
    for (const auto& c : y->clauses)
      if (!same(ctx.assume(c.tope), x, c.body)) return false;
    return true;
  }
  if (x->kind == VKind::Refl && y->kind == VKind::Refl) return true;
  if (x->kind == VKind::Neutral && y->kind == VKind::Neutral)
    return conv_neutral(ctx, *x->neutral, *y->neutral) != nullptr;
  return false;
}

bool Kernel::conv_type_direct(const TeleContext& ctx, const Val& a, const Val& b) const {
  Val x = force(ctx, a), y = force(ctx, b);
  if (x == y) return true;
  if (x->kind == VKind::RecOr || y->kind == VKind::RecOr || x->kind == VKind::Neutral || y->kind == VKind::Neutral)
    return conv_cases(ctx, vuniverse(), x, y, true);
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case VKind::Universe: return true;
    case VKind::Pi:
    case VKind::Sigma: {
      if (!conv_type(ctx, x->a, y->a)) return false;
      TeleContext inner = ctx.bind(x->name, x->a);
      Val v = vvar(ctx.depth());
      return conv_type(inner, instantiate(x->closure, v), instantiate(y->closure, v));
    }
    case VKind::Id:
      return conv_type(ctx, x->a, y->a) && conv(ctx, x->a, x->b, y->b) && conv(ctx, x->a, x->c, y->c);
    case VKind::ExtType: {
      const auto& names = ext_binders(x);
      if (names.size() != ext_binders(y).size()) return false;
      TeleContext inner = ctx.bind_cube(names, options_.cube_cap, x->closure.term->span);
      auto pts = inner.last_points(names.size());
      ExtInstance ix = instantiate_ext(x, pts), iy = instantiate_ext(y, pts);
      if (!inner.assume(ix.shape).entails(iy.shape) || !inner.assume(iy.shape).entails(ix.shape)) return false;
      TeleContext in_shape = inner.assume(ix.shape);
      if (!conv_type(in_shape, ix.body, iy.body)) return false;
      auto cover = [](const std::vector<VClause>& cs) {
        shape::Tope phi = shape::Tope::bot();
        for (const auto& c : cs) phi = phi.kind() == shape::TopeKind::Bot ? c.tope : shape::Tope::disj(phi, c.tope);
        return phi;
      };
      const shape::Tope cx = cover(ix.clauses), cy = cover(iy.clauses);
      if (!in_shape.assume(cx).entails(cy) || !in_shape.assume(cy).entails(cx)) return false;
      for (const auto& l : ix.clauses)
        for (const auto& r : iy.clauses)
          if (!conv(in_shape.assume(shape::Tope::conj(l.tope, r.tope)), ix.body, l.body, r.body)) return false;
      return true;
    }
    default: return false;
  }
}

bool Kernel::conv_points(const TeleContext& ctx, const std::vector<shape::Point>& a,
                         const std::vector<shape::Point>& b) const {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i]) && !ctx.entails(shape::Tope::equal(a[i], b[i]))) return false;
  return true;
}

Val Kernel::conv_neutral(const TeleContext& ctx, const Neutral& a, const Neutral& b) const {
  if (a.kind != b.kind) return nullptr;
  switch (a.kind) {
    case NKind::Var: return a.level == b.level ? ctx.type_of(a.level) : nullptr;
    case NKind::Global: {
      if (a.name != b.name) return nullptr;
      const GlobalEntry* g = lookup(a.name);
      return g ? g->type : nullptr;
    }
    case NKind::J: {
      const auto& m = a.motive;
      const auto& n = b.motive;
      if (!conv_type(ctx, m[0], n[0]) || !conv(ctx, m[0], m[1], n[1]) ||
          !conv(ctx, j_motive_type(m[0]), m[2], n[2]) || !conv(ctx, j_base_type(m[0], m[2]), m[3], n[3]) ||
          !conv(ctx, m[0], m[4], n[4]) || !conv_neutral(ctx, *a.head, *b.head))
        return nullptr;
      return apply(apply(apply(m[2], m[1]), m[4]), vneutral(a.head));
    }
    default: break;
  }
  Val head = conv_neutral(ctx, *a.head, *b.head);
  if (!head) return nullptr;
  head = force(ctx, head);
  switch (a.kind) {
    case NKind::App:
      if (head->kind != VKind::Pi || !conv(ctx, head->a, a.arg, b.arg)) return nullptr;
      return instantiate(head->closure, a.arg);
    case NKind::First: return head->kind == VKind::Sigma ? head->a : nullptr;
    case NKind::Second:
      return head->kind == VKind::Sigma ? instantiate(head->closure, first(vneutral(a.head))) : nullptr;
    case NKind::ExtApp:
      if (head->kind != VKind::ExtType || !conv_points(ctx, a.points, b.points)) return nullptr;
      return instantiate_ext(head, a.points).body;
    default: return nullptr;
  }
}

// ---- readback --------------------------------------------------------------

namespace {

shape::Point point_index(int depth, const shape::Point& p) {
  return p.is_var() ? shape::Point::variable(depth - 1 - p.var) : p;
}

}  // namespace

TermPtr Kernel::quote(const TeleContext& ctx, const Val& type, const Val& v) const {
  if (ctx.inconsistent()) return quote_untyped(ctx, v);
  Val ty = force(ctx, type);
  switch (ty->kind) {
    case VKind::Pi: {
      const std::string& name = v->kind == VKind::Lambda ? v->name : ty->name;
      TeleContext inner = ctx.bind(name, ty->a);
      Val x = vvar(ctx.depth());
      return make_term(TermKind::Lambda, {}, {quote(inner, instantiate(ty->closure, x), apply(v, x))}, name);
    }
    case VKind::Sigma: {
      Val a = first(v);
      return make_term(TermKind::Pair, {}, {quote(ctx, ty->a, a), quote(ctx, instantiate(ty->closure, a), second(v))});
    }
    case VKind::ExtType: {
      const auto& names = v->kind == VKind::ExtLambda ? v->closure.term->binders : ext_binders(ty);
      TeleContext inner = ctx.bind_cube(names, options_.cube_cap, {});
      auto pts = inner.last_points(names.size());
      ExtInstance inst = instantiate_ext(ty, pts);
      auto body = quote(inner.assume(inst.shape), inst.body, ext_apply(v, pts));
      return with_binders(TermKind::ExtLambda, {}, names, {body});
    }
    case VKind::Universe: return quote_type(ctx, v);
    default: break;
  }
  Val x = force(ctx, v);
  switch (x->kind) {
    case VKind::Refl: return make_term(TermKind::Refl, {});
    case VKind::Neutral: return quote_neutral(ctx, *x->neutral, nullptr);
    case VKind::RecOr: {
      auto t = std::make_shared<Term>();
      t->kind = TermKind::RecOr;
      for (const auto& c : x->clauses)
        t->clauses.push_back({tope_to_indices(ctx.depth(), c.tope), quote(ctx.assume(c.tope), ty, c.body)});
      return t;
    }
    default: return quote_untyped(ctx, x);
  }
}

TermPtr Kernel::quote_type(const TeleContext& ctx, const Val& type) const {
  if (ctx.inconsistent()) return quote_untyped(ctx, type);
  Val x = force(ctx, type);
  switch (x->kind) {
    case VKind::Universe: return make_term(TermKind::Universe, {});
    case VKind::Pi:
    case VKind::Sigma: {
      auto dom = quote_type(ctx, x->a);
      TeleContext inner = ctx.bind(x->name, x->a);
      auto cod = quote_type(inner, instantiate(x->closure, vvar(ctx.depth())));
      return make_term(x->kind == VKind::Pi ? TermKind::Pi : TermKind::Sigma, {}, {dom, cod}, x->name);
    }
    case VKind::Id:
      return make_term(TermKind::Id, {}, {quote_type(ctx, x->a), quote(ctx, x->a, x->b), quote(ctx, x->a, x->c)});
    case VKind::ExtType: {
      const auto& names = ext_binders(x);
      TeleContext inner = ctx.bind_cube(names, options_.cube_cap, {});
      auto pts = inner.last_points(names.size());
      ExtInstance inst = instantiate_ext(x, pts);
      TeleContext in_shape = inner.assume(inst.shape);
      auto t = std::make_shared<Term>();
      t->kind = TermKind::ExtType;
      t->binders = names;
      t->shape = tope_to_indices(inner.depth(), inst.shape);
      t->args = {quote_type(in_shape, inst.body)};
      for (const auto& c : inst.clauses)
        t->clauses.push_back(
            {tope_to_indices(inner.depth(), c.tope), quote(in_shape.assume(c.tope), inst.body, c.body)});
      return t;
    }
    case VKind::RecOr: {
      auto t = std::make_shared<Term>();
      t->kind = TermKind::RecOr;
      for (const auto& c : x->clauses)
        t->clauses.push_back({tope_to_indices(ctx.depth(), c.tope), quote_type(ctx.assume(c.tope), c.body)});
      return t;
    }
    case VKind::Neutral: return quote_neutral(ctx, *x->neutral, nullptr);
    default: return quote_untyped(ctx, x);
  }
}

TermPtr Kernel::quote_neutral(const TeleContext& ctx, const Neutral& n, Val* type) const {
  Val ty;
  TermPtr out;
  switch (n.kind) {
    case NKind::Var:
      out = make_var(ctx.depth() - 1 - n.level);
      ty = n.level < ctx.depth() ? ctx.type_of(n.level) : nullptr;
      break;
    case NKind::Global: {
      out = make_global(n.name);
      const GlobalEntry* g = lookup(n.name);
      ty = g ? g->type : nullptr;
      break;
    }
    case NKind::J: {
      const auto& m = n.motive;
      std::vector<TermPtr> args{quote_type(ctx, m[0]), quote(ctx, m[0], m[1]), quote(ctx, j_motive_type(m[0]), m[2]),
                                quote(ctx, j_base_type(m[0], m[2]), m[3]), quote(ctx, m[0], m[4]),
                                quote_neutral(ctx, *n.head, nullptr)};
      out = make_term(TermKind::IdJ, {}, std::move(args));
      ty = apply(apply(apply(m[2], m[1]), m[4]), vneutral(n.head));
      break;
    }
    default: {
      Val head_ty;
      TermPtr head = quote_neutral(ctx, *n.head, &head_ty);
      if (head_ty) head_ty = force(ctx, head_ty);
      auto has = [&](VKind k) { return head_ty && head_ty->kind == k; };
      switch (n.kind) {
        case NKind::App:
          if (has(VKind::Pi)) {
            out = make_term(TermKind::App, {}, {head, quote(ctx, head_ty->a, n.arg)});
            ty = instantiate(head_ty->closure, n.arg);
          } else {
            out = make_term(TermKind::App, {}, {head, quote_untyped(ctx, n.arg)});
          }
          break;
        case NKind::First:
          out = make_term(TermKind::First, {}, {head});
          if (has(VKind::Sigma)) ty = head_ty->a;
          break;
        case NKind::Second:
          out = make_term(TermKind::Second, {}, {head});
          if (has(VKind::Sigma)) ty = instantiate(head_ty->closure, first(vneutral(n.head)));
          break;
        case NKind::ExtApp: {
          auto t = std::make_shared<Term>();
          t->kind = TermKind::ExtApp;
          t->args = {head};
          for (const auto& p : n.points) t->points.push_back(point_index(ctx.depth(), p));
          out = t;
          if (has(VKind::ExtType)) ty = instantiate_ext(head_ty, n.points).body;
          break;
        }
        default: break;
      }
    }
  }
  if (type) *type = ty;
  return out;
}

TermPtr Kernel::quote_untyped(const TeleContext& ctx, const Val& v) const {
  switch (v->kind) {
    case VKind::Universe: return make_term(TermKind::Universe, {});
    case VKind::Refl: return make_term(TermKind::Refl, {});
    case VKind::Pi:
    case VKind::Sigma: {
      auto dom = quote_untyped(ctx, v->a);
      TeleContext inner = ctx.bind(v->name, v->a);
      auto cod = quote_untyped(inner, instantiate(v->closure, vvar(ctx.depth())));
      return make_term(v->kind == VKind::Pi ? TermKind::Pi : TermKind::Sigma, {}, {dom, cod}, v->name);
    }
    case VKind::Lambda: {
      TeleContext inner = ctx.bind(v->name, nullptr);
      return make_term(TermKind::Lambda, {}, {quote_untyped(inner, apply(v, vvar(ctx.depth())))}, v->name);
    }
    case VKind::Pair: return make_term(TermKind::Pair, {}, {quote_untyped(ctx, v->a), quote_untyped(ctx, v->b)});
    case VKind::Id:
      return make_term(TermKind::Id, {}, {quote_untyped(ctx, v->a), quote_untyped(ctx, v->b), quote_untyped(ctx, v->c)});
    case VKind::ExtType:
    case VKind::ExtLambda: {
      const auto& names = v->closure.term->binders;
      TeleContext inner = ctx.bind_cube(names, names.size() + ctx.cube_count(), {});
      auto pts = inner.last_points(names.size());
      if (v->kind == VKind::ExtLambda)
        return with_binders(TermKind::ExtLambda, {}, names, {quote_untyped(inner, ext_apply(v, pts))});
      ExtInstance inst = instantiate_ext(v, pts);
      auto t = std::make_shared<Term>();
      t->kind = TermKind::ExtType;
      t->binders = names;
      t->shape = tope_to_indices(inner.depth(), inst.shape);
      t->args = {quote_untyped(inner, inst.body)};
      for (const auto& c : inst.clauses)
        t->clauses.push_back({tope_to_indices(inner.depth(), c.tope), quote_untyped(inner, c.body)});
      return t;
    }
    case VKind::RecOr: {
      auto t = std::make_shared<Term>();
      t->kind = TermKind::RecOr;
      for (const auto& c : v->clauses)
        t->clauses.push_back({tope_to_indices(ctx.depth(), c.tope), quote_untyped(ctx, c.body)});
      return t;
    }
    case VKind::Neutral: {
      const Neutral& n = *v->neutral;
      switch (n.kind) {
        case NKind::Var: return make_var(ctx.depth() - 1 - n.level);
        case NKind::Global: return make_global(n.name);
        case NKind::App:
          return make_term(TermKind::App, {}, {quote_untyped(ctx, vneutral(n.head)), quote_untyped(ctx, n.arg)});
        case NKind::First: return make_term(TermKind::First, {}, {quote_untyped(ctx, vneutral(n.head))});
        case NKind::Second: return make_term(TermKind::Second, {}, {quote_untyped(ctx, vneutral(n.head))});
        case NKind::J: {
          std::vector<TermPtr> args;
          for (const auto& m : n.motive) args.push_back(quote_untyped(ctx, m));
          args.push_back(quote_untyped(ctx, vneutral(n.head)));
          return make_term(TermKind::IdJ, {}, std::move(args));
        }
        case NKind::ExtApp: {
          auto t = std::make_shared<Term>();
          t->kind = TermKind::ExtApp;
          t->args = {quote_untyped(ctx, vneutral(n.head))};
          for (const auto& p : n.points) t->points.push_back(point_index(ctx.depth(), p));
          return t;
        }
      }
      break;
    }
    case VKind::Point: break;
  }
  return make_term(TermKind::Hole, {});
}

}  // namespace sctt::kernel
