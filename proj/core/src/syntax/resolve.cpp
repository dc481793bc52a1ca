#include "sctt/syntax/resolve.hpp"

#include <algorithm>
#include <functional>

namespace sctt::syntax {

using kernel::Clause;
using kernel::make_term;
using kernel::Term;
using kernel::TermKind;
using kernel::TermPtr;

namespace {

struct Local {
  std::string name;
  Layer layer;
};

class Resolver {
public:
  Resolver(const GlobalScope& globals, std::set<std::string>* refs) : globals_(globals), refs_(refs) {}

  TermPtr term(const SurfaceTerm& t) {
    const auto& c = t.children;
    switch (t.kind) {
      case SurfaceKind::Var: {
        if (auto idx = lookup(t.name)) {
          if (locals_[locals_.size() - 1 - *idx].layer != Layer::Type)
            throw Error(ErrorCode::LayerMismatch, "cube variable '" + t.name + "' used where a term is required", t.span);
          return kernel::make_var(*idx, t.span);
        }
        if (globals_.contains(t.name)) {
          if (refs_) refs_->insert(t.name);
          return kernel::make_global(t.name, t.span);
        }
        throw Error(ErrorCode::UnboundName, "unbound name '" + t.name + "'", t.span);
      }
      case SurfaceKind::Universe: return make_term(TermKind::Universe, t.span);
      case SurfaceKind::Refl: return make_term(TermKind::Refl, t.span);
      case SurfaceKind::Hole: return make_term(TermKind::Hole, t.span);
      case SurfaceKind::Pi:
      case SurfaceKind::Sigma: {
        if (c[0]->kind == SurfaceKind::Cube2)
          throw Error(ErrorCode::LayerMismatch, "the interval 2 is not a type; bind cube variables with an extension type",
                      c[0]->span);
        auto dom = term(*c[0]);
        auto cod = under({t.name}, Layer::Type, *c[1]);
        return make_term(t.kind == SurfaceKind::Pi ? TermKind::Pi : TermKind::Sigma, t.span, {dom, cod}, t.name);
      }
      case SurfaceKind::Lambda: return make_term(TermKind::Lambda, t.span, {under({t.name}, Layer::Type, *c[0])}, t.name);
      case SurfaceKind::App: return make_term(TermKind::App, t.span, {term(*c[0]), term(*c[1])});
      case SurfaceKind::Pair: return make_term(TermKind::Pair, t.span, {term(*c[0]), term(*c[1])});
      case SurfaceKind::First:
      case SurfaceKind::Second: {
        const auto kind = t.kind == SurfaceKind::First ? TermKind::First : TermKind::Second;
        if (!c.empty()) return make_term(kind, t.span, {term(*c[0])});
        return make_term(kind, t.span);  // bare projection
      }
      case SurfaceKind::Id: return make_term(TermKind::Id, t.span, {term(*c[0]), term(*c[1]), term(*c[2])});
      case SurfaceKind::IdJ: {
        std::vector<TermPtr> args;
        for (const auto& a : c) args.push_back(term(*a));
        return make_term(TermKind::IdJ, t.span, std::move(args));
      }
      case SurfaceKind::Annot: return make_term(TermKind::Annot, t.span, {term(*c[0]), term(*c[1])});
      case SurfaceKind::ExtensionType: {
        const auto& shape = *c[0];
        push(shape.binders, Layer::Cube);
        auto out = std::make_shared<Term>();
        out->kind = TermKind::ExtType;
        out->span = t.span;
        out->binders = shape.binders;
        out->shape = tope(*shape.children[0]);
        out->args = {term(*c[1])};
        for (std::size_t i = 2; i + 1 < c.size(); i += 2) out->clauses.push_back({tope(*c[i]), term(*c[i + 1])});
        pop(shape.binders.size());
        return out;
      }
      case SurfaceKind::ExtLambda: {
        push(t.binders, Layer::Cube);
        auto body = term(*c[0]);
        pop(t.binders.size());
        auto out = make_term(TermKind::ExtLambda, t.span, {body});
        const_cast<Term&>(*out).binders = t.binders;
        return out;
      }
      case SurfaceKind::ExtApp: {
        auto out = std::make_shared<Term>();
        out->kind = TermKind::ExtApp;
        out->span = t.span;
        out->args = {term(*c[0])};
        for (std::size_t i = 1; i < c.size(); ++i) out->points.push_back(point(*c[i]));
        return out;
      }
      case SurfaceKind::RecOr: {
        auto out = std::make_shared<Term>();
        out->kind = TermKind::RecOr;
        out->span = t.span;
        for (std::size_t i = 0; i + 1 < c.size(); i += 2) out->clauses.push_back({tope(*c[i]), term(*c[i + 1])});
        return out;
      }
      case SurfaceKind::Cube2:
        throw Error(ErrorCode::LayerMismatch, "the interval 2 is not a type-layer term", t.span);
      case SurfaceKind::Endpoint:
        throw Error(ErrorCode::LayerMismatch, "endpoint '" + t.name + "' used where a term is required", t.span);
      case SurfaceKind::TopeAtom:
      case SurfaceKind::TopeConn:
      case SurfaceKind::ShapeType:
        throw Error(ErrorCode::LayerMismatch, "tope formula used where a term is required", t.span);
    }
    throw Error(ErrorCode::ParseError, "unsupported syntax", t.span);
  }

  shape::Tope tope(const SurfaceTerm& t) {
    if (t.kind == SurfaceKind::TopeConn) {
      auto l = tope(*t.children[0]);
      auto r = tope(*t.children[1]);
      return t.name == "/\\" ? shape::Tope::conj(l, r) : shape::Tope::disj(l, r);
    }
    if (t.kind == SurfaceKind::TopeAtom) {
      if (t.name == "TOP") return shape::Tope::top();
      if (t.name == "BOT") return shape::Tope::bot();
      auto l = point(*t.children[0]);
      auto r = point(*t.children[1]);
      return t.name == "<=" ? shape::Tope::leq(l, r) : shape::Tope::equal(l, r);
    }
    throw Error(ErrorCode::LayerMismatch, "expected a tope formula", t.span);
  }

  shape::Point point(const SurfaceTerm& t) {
    if (t.kind == SurfaceKind::Endpoint) return t.name == "0" ? shape::Point::zero() : shape::Point::one();
    if (t.kind != SurfaceKind::Var) throw Error(ErrorCode::LayerMismatch, "expected a cube point", t.span);
    if (auto idx = lookup(t.name)) {
      if (locals_[locals_.size() - 1 - *idx].layer != Layer::Cube)
        throw Error(ErrorCode::LayerMismatch, "'" + t.name + "' is a type-layer variable, not a cube point", t.span);
      return shape::Point::variable(*idx);
    }
    if (globals_.contains(t.name))
      throw Error(ErrorCode::LayerMismatch, "'" + t.name + "' is a declaration, not a cube point", t.span);
    throw Error(ErrorCode::UnboundName, "unbound name '" + t.name + "'", t.span);
  }

  void push(const std::vector<std::string>& names, Layer layer) {
    for (const auto& n : names) locals_.push_back({n, layer});
  }
  void pop(std::size_t n) { locals_.resize(locals_.size() - n); }

  TermPtr under(const std::vector<std::string>& names, Layer layer, const SurfaceTerm& t) {
    push(names, layer);
    auto out = term(t);
    pop(names.size());
    return out;
  }

private:
  const GlobalScope& globals_;
  std::set<std::string>* refs_;
  std::vector<Local> locals_;

  std::optional<int> lookup(const std::string& name) const {
    if (name.empty() || name == "_") return std::nullopt;
    for (std::size_t i = locals_.size(); i-- > 0;)
      if (locals_[i].name == name) return static_cast<int>(locals_.size() - 1 - i);
    return std::nullopt;
  }
};

// Parameter telescope after resolution.
struct Binder {
  bool cube = false;
  std::string name;                 // type layer
  TermPtr type;                     // type layer
  std::vector<std::string> names;   // cube layer
  shape::Tope shape;                // cube layer
  Span span;
};

}  // namespace

ResolvedDecl resolve_declaration(const Declaration& d, const GlobalScope& scope) {
  if (d.kind != DeclKind::Check && scope.contains(d.name))
    throw Error(ErrorCode::DuplicateDeclaration, "'" + d.name + "' is already declared", d.name_span);

  ResolvedDecl out{d.kind, d.name, d.span, d.name_span, nullptr, nullptr, {}};
  Resolver r(scope, &out.references);

  std::vector<Binder> binders;
  std::size_t pushed = 0;
  for (std::size_t i = 0; i < d.params.size(); ++i) {
    const Param& p = d.params[i];
    switch (p.layer) {
      case Layer::Type: {
        if (p.annotation->kind == SurfaceKind::Cube2)
          throw Error(ErrorCode::LayerMismatch, "the interval 2 is not a type", p.annotation->span);
        Binder b;
        b.name = p.name;
        b.type = r.term(*p.annotation);
        b.span = p.span;
        r.push({p.name}, Layer::Type);
        ++pushed;
        binders.push_back(std::move(b));
        break;
      }
      case Layer::Cube: {
        if (binders.empty() || !binders.back().cube || i == 0 || d.params[i - 1].layer != Layer::Cube) {
          Binder b;
          b.cube = true;
          b.span = p.span;
          b.shape = shape::Tope::top();
          binders.push_back(std::move(b));
        }
        binders.back().names.push_back(p.name);
        r.push({p.name}, Layer::Cube);
        ++pushed;
        break;
      }
      case Layer::Tope: {
        const bool follows_cube =
            i > 0 && (d.params[i - 1].layer == Layer::Cube || d.params[i - 1].layer == Layer::Tope) && !binders.empty() &&
            binders.back().cube;
        if (!follows_cube)
          throw Error(ErrorCode::LayerMismatch, "tope parameters must follow the cube variables they constrain", p.span);
        auto phi = r.tope(*p.annotation);
        auto& b = binders.back();
        b.shape = b.shape.kind() == shape::TopeKind::Top ? phi : shape::Tope::conj(b.shape, phi);
        break;
      }
    }
  }

  // Tope parameter points were resolved with every cube variable of the run
  // in scope, which matches the extension binder's own index layout.
  TermPtr type = r.term(*d.type);
  TermPtr body = d.body ? r.term(*d.body) : nullptr;
  r.pop(pushed);

  for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
    if (it->cube) {
      auto ext = std::make_shared<Term>();
      ext->kind = TermKind::ExtType;
      ext->span = type->span;
      ext->binders = it->names;
      ext->shape = it->shape;
      ext->args = {type};
      type = ext;
      if (body) {
        auto lam = std::make_shared<Term>();
        lam->kind = TermKind::ExtLambda;
        lam->span = body->span;
        lam->binders = it->names;
        lam->args = {body};
        body = lam;
      }
    } else {
      type = make_term(TermKind::Pi, type->span, {it->type, type}, it->name);
      if (body) body = make_term(TermKind::Lambda, body->span, {body}, it->name);
    }
  }
  out.type = type;
  out.body = body;
  return out;
}

std::vector<ResolvedDecl> resolve_names(const std::vector<Declaration>& decls, GlobalScope& scope) {
  std::vector<ResolvedDecl> out;
  for (const auto& d : decls) {
    out.push_back(resolve_declaration(d, scope));
    if (d.kind == DeclKind::Def) scope.names[d.name] = GlobalKind::Def;
    if (d.kind == DeclKind::Postulate) scope.names[d.name] = GlobalKind::Postulate;
  }
  return out;
}

TermPtr resolve_term(const SurfaceTerm& term, const GlobalScope& scope, std::set<std::string>* references) {
  Resolver r(scope, references);
  return r.term(term);
}

shape::Tope resolve_tope(const SurfaceTerm& term, const std::vector<std::string>& cube_names) {
  GlobalScope none;
  Resolver r(none, nullptr);
  r.push(cube_names, Layer::Cube);
  // Resolved points are de Bruijn indices; convert to context positions.
  const int n = static_cast<int>(cube_names.size());
  return r.tope(term).map_points([n](const shape::Point& p) {
    return p.is_var() ? shape::Point::variable(n - 1 - p.var) : p;
  });
}

// ---- core -> surface --------------------------------------------------------

namespace {

// Does `t` mention the variable with de Bruijn index `idx`?
bool mentions(const Term& t, int idx) {
  auto in_tope = [&](const shape::Tope& phi, int i) {
    auto vars = phi.variables();
    return vars.count(i) != 0;
  };
  switch (t.kind) {
    case TermKind::Var: return t.index == idx;
    case TermKind::Pi:
    case TermKind::Sigma: return mentions(*t.args[0], idx) || mentions(*t.args[1], idx + 1);
    case TermKind::Lambda: return mentions(*t.args[0], idx + 1);
    case TermKind::ExtType: {
      const int k = idx + static_cast<int>(t.binders.size());
      if (in_tope(t.shape, k) || mentions(*t.args[0], k)) return true;
      for (const auto& c : t.clauses)
        if (in_tope(c.tope, k) || mentions(*c.body, k)) return true;
      return false;
    }
    case TermKind::ExtLambda: return mentions(*t.args[0], idx + static_cast<int>(t.binders.size()));
    case TermKind::ExtApp:
      for (const auto& p : t.points)
        if (p.is_var() && p.var == idx) return true;
      return mentions(*t.args[0], idx);
    case TermKind::RecOr:
      for (const auto& c : t.clauses)
        if (in_tope(c.tope, idx) || mentions(*c.body, idx)) return true;
      return false;
    default:
      for (const auto& a : t.args)
        if (mentions(*a, idx)) return true;
      return false;
  }
}

void collect_globals(const Term& t, std::set<std::string>& out) {
  if (t.kind == TermKind::Global) out.insert(t.name);
  for (const auto& a : t.args) collect_globals(*a, out);
  for (const auto& c : t.clauses) collect_globals(*c.body, out);
}

class Reifier {
public:
  Reifier(const Term& root, std::vector<std::string> scope) : names_(std::move(scope)) {
    collect_globals(root, avoid_);
  }

  SurfacePtr term(const Term& t) {
    const Span sp = t.span;
    switch (t.kind) {
      case TermKind::Var: return make_surface(SurfaceKind::Var, sp, var_name(t.index));
      case TermKind::Global: return make_surface(SurfaceKind::Var, sp, t.name);
      case TermKind::Universe: return make_surface(SurfaceKind::Universe, sp);
      case TermKind::Refl: return make_surface(SurfaceKind::Refl, sp);
      case TermKind::Hole: return make_surface(SurfaceKind::Hole, sp);
      case TermKind::Pi:
      case TermKind::Sigma: {
        const auto kind = t.kind == TermKind::Pi ? SurfaceKind::Pi : SurfaceKind::Sigma;
        auto dom = term(*t.args[0]);
        if (!mentions(*t.args[1], 0)) {
          names_.push_back("");
          auto cod = term(*t.args[1]);
          names_.pop_back();
          return make_surface(kind, sp, "", {dom, cod});
        }
        const std::string n = fresh(t.name);
        names_.push_back(n);
        auto cod = term(*t.args[1]);
        names_.pop_back();
        return make_surface(kind, sp, n, {dom, cod});
      }
      case TermKind::Lambda: {
        const std::string n = fresh(t.name);
        names_.push_back(n);
        auto body = term(*t.args[0]);
        names_.pop_back();
        return make_surface(SurfaceKind::Lambda, sp, n, {body});
      }
      case TermKind::App: return make_surface(SurfaceKind::App, sp, "", {term(*t.args[0]), term(*t.args[1])});
      case TermKind::Pair: return make_surface(SurfaceKind::Pair, sp, "", {term(*t.args[0]), term(*t.args[1])});
      case TermKind::First:
      case TermKind::Second: {
        const auto kind = t.kind == TermKind::First ? SurfaceKind::First : SurfaceKind::Second;
        if (t.args.empty()) return make_surface(kind, sp);
        return make_surface(kind, sp, "", {term(*t.args[0])});
      }
      case TermKind::Id:
        return make_surface(SurfaceKind::Id, sp, "", {term(*t.args[0]), term(*t.args[1]), term(*t.args[2])});
      case TermKind::IdJ: {
        std::vector<SurfacePtr> c;
        for (const auto& a : t.args) c.push_back(term(*a));
        return make_surface(SurfaceKind::IdJ, sp, "", std::move(c));
      }
      case TermKind::Annot: return make_surface(SurfaceKind::Annot, sp, "", {term(*t.args[0]), term(*t.args[1])});
      case TermKind::ExtType: {
        auto names = bind_all(t.binders);
        auto shape = make_surface(SurfaceKind::ShapeType, sp, "", {tope(t.shape)}, names);
        std::vector<SurfacePtr> c{shape, term(*t.args[0])};
        for (const auto& cl : t.clauses) {
          c.push_back(tope(cl.tope));
          c.push_back(term(*cl.body));
        }
        names_.resize(names_.size() - names.size());
        return make_surface(SurfaceKind::ExtensionType, sp, "", std::move(c));
      }
      case TermKind::ExtLambda: {
        auto names = bind_all(t.binders);
        auto body = term(*t.args[0]);
        names_.resize(names_.size() - names.size());
        return make_surface(SurfaceKind::ExtLambda, sp, "", {body}, names);
      }
      case TermKind::ExtApp: {
        std::vector<SurfacePtr> c{term(*t.args[0])};
        for (const auto& p : t.points) c.push_back(point(p, sp));
        return make_surface(SurfaceKind::ExtApp, sp, "", std::move(c));
      }
      case TermKind::RecOr: {
        std::vector<SurfacePtr> c;
        for (const auto& cl : t.clauses) {
          c.push_back(tope(cl.tope));
          c.push_back(term(*cl.body));
        }
        return make_surface(SurfaceKind::RecOr, sp, "", std::move(c));
      }
    }
    return make_surface(SurfaceKind::Hole, sp);
  }

private:
  std::vector<std::string> names_;
  std::set<std::string> avoid_;

  std::string var_name(int idx) const {
    const int pos = static_cast<int>(names_.size()) - 1 - idx;
    if (pos < 0 || names_[static_cast<std::size_t>(pos)].empty()) return "#" + std::to_string(idx);
    return names_[static_cast<std::size_t>(pos)];
  }

  std::string fresh(const std::string& hint) {
    std::string base = hint.empty() || hint == "_" ? "x" : hint;
    auto taken = [&](const std::string& n) {
      return avoid_.count(n) || is_reserved_word(n) ||
             std::find(names_.begin(), names_.end(), n) != names_.end();
    };
    if (!taken(base)) return base;
    for (int k = 1;; ++k) {
      std::string cand = base + std::to_string(k);
      if (!taken(cand)) return cand;
    }
  }

  std::vector<std::string> bind_all(const std::vector<std::string>& hints) {
    std::vector<std::string> out;
    for (const auto& h : hints) {
      out.push_back(fresh(h.empty() ? "t" : h));
      names_.push_back(out.back());
    }
    return out;
  }

  SurfacePtr point(const shape::Point& p, Span sp) const {
    switch (p.kind) {
      case shape::Point::Kind::Zero: return make_surface(SurfaceKind::Endpoint, sp, "0");
      case shape::Point::Kind::One: return make_surface(SurfaceKind::Endpoint, sp, "1");
      case shape::Point::Kind::Var: return make_surface(SurfaceKind::Var, sp, var_name(p.var));
    }
    return nullptr;
  }

  SurfacePtr tope(const shape::Tope& phi) const {
    const Span sp{};
    switch (phi.kind()) {
      case shape::TopeKind::Top: return make_surface(SurfaceKind::TopeAtom, sp, "TOP");
      case shape::TopeKind::Bot: return make_surface(SurfaceKind::TopeAtom, sp, "BOT");
      case shape::TopeKind::Leq:
        return make_surface(SurfaceKind::TopeAtom, sp, "<=", {point(phi.lhs_point(), sp), point(phi.rhs_point(), sp)});
      case shape::TopeKind::Equal:
        return make_surface(SurfaceKind::TopeAtom, sp, "===", {point(phi.lhs_point(), sp), point(phi.rhs_point(), sp)});
      case shape::TopeKind::And: return make_surface(SurfaceKind::TopeConn, sp, "/\\", {tope(phi.left()), tope(phi.right())});
      case shape::TopeKind::Or: return make_surface(SurfaceKind::TopeConn, sp, "\\/", {tope(phi.left()), tope(phi.right())});
    }
    return nullptr;
  }
};

}  // namespace

SurfacePtr to_surface(const Term& term, const std::vector<std::string>& scope) {
  return Reifier(term, scope).term(term);
}

}  // namespace sctt::syntax
