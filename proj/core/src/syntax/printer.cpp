#include <map>
#include <vector>

#include "sctt/syntax/surface.hpp"

namespace sctt::syntax {

namespace {

// Binding strength, loosest first.
enum Prec { kArrow = 0, kSigma = 1, kEq = 2, kApp = 3, kAtom = 4 };

int precedence(const SurfaceTerm& t) {
  switch (t.kind) {
    case SurfaceKind::Pi:
    case SurfaceKind::Lambda:
    case SurfaceKind::ExtLambda: return kArrow;
    case SurfaceKind::Sigma: return kSigma;
    case SurfaceKind::Id: return kEq;
    case SurfaceKind::App:
    case SurfaceKind::ExtApp: return kApp;
    case SurfaceKind::First:
    case SurfaceKind::Second: return t.children.empty() ? kAtom : kApp;
    case SurfaceKind::TopeConn: return kArrow;
    case SurfaceKind::TopeAtom: return t.children.empty() ? kAtom : kArrow;
    default: return kAtom;
  }
}

std::string print(const SurfaceTerm& t, int ctx);

std::string tope_string(const SurfaceTerm& t, int ctx_prec) {
  // \/ = 1, /\ = 2, atoms = 3
  if (t.kind == SurfaceKind::TopeConn) {
    const int p = t.name == "\\/" ? 1 : 2;
    std::string s = tope_string(*t.children[0], p) + " " + t.name + " " + tope_string(*t.children[1], p + 1);
    return p < ctx_prec ? "(" + s + ")" : s;
  }
  if (t.kind == SurfaceKind::TopeAtom && t.children.size() == 2)
    return print(*t.children[0], kAtom) + " " + t.name + " " + print(*t.children[1], kAtom);
  return print(t, kAtom);
}

std::string wrap(const SurfaceTerm& t, int ctx) {
  std::string s = print(t, kArrow);
  return precedence(t) < ctx ? "(" + s + ")" : s;
}

// The left operand of a non-dependent arrow or product. An annotation there
// would read back as a binder, and a bare projection as the head of an
// application would swallow its argument.
std::string operand(const SurfaceTerm& t, int ctx) {
  if (t.kind == SurfaceKind::Annot) return "(" + print(t, kArrow) + ")";
  return wrap(t, ctx);
}

std::string head(const SurfaceTerm& t) {
  if ((t.kind == SurfaceKind::First || t.kind == SurfaceKind::Second) && t.children.empty())
    return "(" + print(t, kArrow) + ")";
  return wrap(t, kApp);
}

// An argument position; a bare projection there would take the next
// argument of the enclosing spine as its own.
std::string argument(const SurfaceTerm& t) {
  if ((t.kind == SurfaceKind::First || t.kind == SurfaceKind::Second) && t.children.empty())
    return "(" + print(t, kArrow) + ")";
  return wrap(t, kAtom);
}

std::string clauses(const std::vector<SurfacePtr>& c, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i + 1 < c.size(); i += 2) {
    if (i > from) out += ", ";
    out += tope_string(*c[i], 0) + " |-> " + print(*c[i + 1], kArrow);
  }
  return out;
}

std::string join(const std::vector<std::string>& names, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? sep : "") + names[i];
  return out;
}

std::string print(const SurfaceTerm& t, int ctx) {
  if (precedence(t) < ctx) return "(" + print(t, kArrow) + ")";
  const auto& c = t.children;
  switch (t.kind) {
    case SurfaceKind::Var: return t.name;
    case SurfaceKind::Universe: return "U";
    case SurfaceKind::Refl: return "refl";
    case SurfaceKind::Hole: return "?";
    case SurfaceKind::Cube2: return "2";
    case SurfaceKind::Endpoint: return t.name;
    case SurfaceKind::Pi:
      if (t.name.empty()) return operand(*c[0], kSigma) + " -> " + wrap(*c[1], kArrow);
      return "(" + t.name + " : " + print(*c[0], kArrow) + ") -> " + wrap(*c[1], kArrow);
    case SurfaceKind::Sigma:
      if (t.name.empty()) return operand(*c[0], kEq) + " * " + wrap(*c[1], kSigma);
      return "(" + t.name + " : " + print(*c[0], kArrow) + ") * " + wrap(*c[1], kSigma);
    case SurfaceKind::Lambda: {
      std::vector<std::string> names{t.name};
      const SurfaceTerm* body = c[0].get();
      while (body->kind == SurfaceKind::Lambda) {
        names.push_back(body->name);
        body = body->children[0].get();
      }
      return "\\" + join(names, " ") + " -> " + print(*body, kArrow);
    }
    case SurfaceKind::App: return head(*c[0]) + " " + argument(*c[1]);
    case SurfaceKind::Pair: return "(" + print(*c[0], kArrow) + ", " + print(*c[1], kArrow) + ")";
    case SurfaceKind::First:
    case SurfaceKind::Second: {
      const char* kw = t.kind == SurfaceKind::First ? "first" : "second";
      if (c.empty()) return kw;
      return std::string(kw) + " " + argument(*c[0]);
    }
    case SurfaceKind::Id:
      return wrap(*c[1], kApp) + " =_{" + print(*c[0], kArrow) + "} " + wrap(*c[2], kApp);
    case SurfaceKind::IdJ: {
      std::string out = "idJ(";
      for (std::size_t i = 0; i < c.size(); ++i) out += (i ? ", " : "") + print(*c[i], kArrow);
      return out + ")";
    }
    case SurfaceKind::TopeAtom:
    case SurfaceKind::TopeConn:
      if (t.kind == SurfaceKind::TopeAtom && c.empty()) return t.name;
      return tope_string(t, 0);
    case SurfaceKind::ShapeType: {
      std::vector<std::string> cube(t.binders.size(), "2");
      return "{" + join(t.binders, " ") + " : " + join(cube, " * ") + " | " + tope_string(*c[0], 0) + "}";
    }
    case SurfaceKind::ExtensionType: {
      std::string out = "<" + print(*c[0], kArrow) + " -> " + print(*c[1], kArrow);
      if (c.size() > 2) out += " [" + clauses(c, 2) + "]";
      return out + ">";
    }
    case SurfaceKind::ExtLambda: return "\\{" + join(t.binders, " ") + "} -> " + print(*c[0], kArrow);
    case SurfaceKind::ExtApp: {
      std::string out = head(*c[0]) + " @ (";
      for (std::size_t i = 1; i < c.size(); ++i) out += (i > 1 ? ", " : "") + print(*c[i], kAtom);
      return out + ")";
    }
    case SurfaceKind::RecOr: return "recOR(" + clauses(c, 0) + ")";
    case SurfaceKind::Annot: return "(" + print(*c[0], kArrow) + " : " + print(*c[1], kArrow) + ")";
  }
  return "?";
}

// Scope for alpha comparison: name -> binding depth, per side.
struct AlphaScope {
  std::vector<std::string> left, right;

  // Index from the innermost binder, or -1 when free.
  static int lookup(const std::vector<std::string>& s, const std::string& n) {
    for (std::size_t i = s.size(); i-- > 0;)
      if (s[i] == n) return static_cast<int>(s.size() - 1 - i);
    return -1;
  }
};

bool alpha(const SurfaceTerm& a, const SurfaceTerm& b, AlphaScope& sc);

bool alpha_under(const std::vector<std::string>& na, const std::vector<std::string>& nb, const SurfaceTerm& a,
                 const SurfaceTerm& b, AlphaScope& sc) {
  if (na.size() != nb.size()) return false;
  for (std::size_t i = 0; i < na.size(); ++i) {
    sc.left.push_back(na[i]);
    sc.right.push_back(nb[i]);
  }
  const bool r = alpha(a, b, sc);
  sc.left.resize(sc.left.size() - na.size());
  sc.right.resize(sc.right.size() - nb.size());
  return r;
}

bool alpha(const SurfaceTerm& a, const SurfaceTerm& b, AlphaScope& sc) {
  if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
  const auto& ca = a.children;
  const auto& cb = b.children;
  switch (a.kind) {
    case SurfaceKind::Var: {
      const int ia = AlphaScope::lookup(sc.left, a.name);
      const int ib = AlphaScope::lookup(sc.right, b.name);
      if (ia != ib) return false;
      return ia >= 0 || a.name == b.name;
    }
    case SurfaceKind::Pi:
    case SurfaceKind::Sigma: {
      if (a.name.empty() != b.name.empty()) return false;
      if (!alpha(*ca[0], *cb[0], sc)) return false;
      if (a.name.empty()) return alpha(*ca[1], *cb[1], sc);
      return alpha_under({a.name}, {b.name}, *ca[1], *cb[1], sc);
    }
    case SurfaceKind::Lambda: return alpha_under({a.name}, {b.name}, *ca[0], *cb[0], sc);
    case SurfaceKind::ExtLambda: return alpha_under(a.binders, b.binders, *ca[0], *cb[0], sc);
    case SurfaceKind::ExtensionType: {
      const auto& sa = *ca[0];
      const auto& sb = *cb[0];
      if (sa.binders.size() != sb.binders.size()) return false;
      for (std::size_t i = 0; i < ca.size(); ++i) {
        const auto& x = i == 0 ? *sa.children[0] : *ca[i];
        const auto& y = i == 0 ? *sb.children[0] : *cb[i];
        if (!alpha_under(sa.binders, sb.binders, x, y, sc)) return false;
      }
      return true;
    }
    case SurfaceKind::Endpoint:
    case SurfaceKind::TopeAtom:
    case SurfaceKind::TopeConn:
      if (a.name != b.name) return false;
      break;
    default: break;
  }
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (!alpha(*ca[i], *cb[i], sc)) return false;
  return true;
}

std::string param_string(const std::vector<Param>& params) {
  std::string out;
  std::size_t i = 0;
  while (i < params.size()) {
    const Param& p = params[i];
    if (p.layer == Layer::Tope) {
      out += " [" + tope_string(*p.annotation, 0) + "]";
      ++i;
      continue;
    }
    std::vector<std::string> names{p.name};
    std::size_t j = i + 1;
    while (j < params.size() && params[j].layer == p.layer && params[j].annotation == p.annotation)
      names.push_back(params[j++].name);
    out += " (" + join(names, " ") + " : " + (p.layer == Layer::Cube ? std::string("2") : print(*p.annotation, kArrow)) +
           ")";
    i = j;
  }
  return out;
}

}  // namespace

std::string pretty_print(const SurfaceTerm& term) { return print(term, kArrow); }

std::string pretty_print(const Declaration& d) {
  switch (d.kind) {
    case DeclKind::Check: return "#check " + pretty_print(*d.body) + " : " + pretty_print(*d.type) + " ;";
    case DeclKind::Postulate:
      return "postulate " + d.name + param_string(d.params) + " : " + pretty_print(*d.type) + " ;";
    case DeclKind::Def:
      return "def " + d.name + param_string(d.params) + " : " + pretty_print(*d.type) + " := " + pretty_print(*d.body) +
             " ;";
  }
  return "";
}

bool alpha_equal(const SurfaceTerm& a, const SurfaceTerm& b) {
  AlphaScope sc;
  return alpha(a, b, sc);
}

}  // namespace sctt::syntax
