#include "random_terms.hpp"

namespace sctt::testkit {

using syntax::make_surface;
using syntax::SurfaceKind;
using syntax::SurfacePtr;

namespace {
const std::vector<std::string> kNames{"a", "b", "c", "x", "y", "p", "q", "B", "f'", "g_1", "u2"};
}

std::string TermGenerator::fresh() { return kNames[static_cast<std::size_t>(pick(static_cast<int>(kNames.size())))]; }

SurfacePtr TermGenerator::term(int depth, std::vector<std::string> scope) {
  std::vector<std::string> cubes;
  return gen(depth, scope, cubes);
}

SurfacePtr TermGenerator::point(const std::vector<std::string>& cubes) {
  const int k = pick(static_cast<int>(cubes.size()) + 2);
  if (k == 0) return make_surface(SurfaceKind::Endpoint, {}, "0");
  if (k == 1) return make_surface(SurfaceKind::Endpoint, {}, "1");
  return make_surface(SurfaceKind::Var, {}, cubes[static_cast<std::size_t>(k - 2)]);
}

SurfacePtr TermGenerator::tope(int depth, const std::vector<std::string>& cubes) {
  const int k = depth <= 0 ? pick(4) : pick(6);
  switch (k) {
    case 0: return make_surface(SurfaceKind::TopeAtom, {}, "TOP");
    case 1: return make_surface(SurfaceKind::TopeAtom, {}, "BOT");
    case 2: return make_surface(SurfaceKind::TopeAtom, {}, "<=", {point(cubes), point(cubes)});
    case 3: return make_surface(SurfaceKind::TopeAtom, {}, "===", {point(cubes), point(cubes)});
    default:
      return make_surface(SurfaceKind::TopeConn, {}, k == 4 ? "/\\" : "\\/",
                          {tope(depth - 1, cubes), tope(depth - 1, cubes)});
  }
}

SurfacePtr TermGenerator::gen(int depth, std::vector<std::string>& scope, std::vector<std::string>& cubes) {
  auto leaf = [&]() -> SurfacePtr {
    switch (pick(5)) {
      case 0: return make_surface(SurfaceKind::Universe, {});
      case 1: return make_surface(SurfaceKind::Refl, {});
      case 2: return make_surface(SurfaceKind::Hole, {});
      case 3: return make_surface(pick(2) ? SurfaceKind::First : SurfaceKind::Second, {});
      default: return make_surface(SurfaceKind::Var, {}, scope[static_cast<std::size_t>(pick(static_cast<int>(scope.size())))]);
    }
  };
  if (depth <= 0) return leaf();
  const int d = depth - 1;
  auto sub = [&] { return gen(d, scope, cubes); };
  // Body under a new binder, restoring the scope afterwards.
  auto under = [&](const std::string& name) {
    scope.push_back(name);
    auto body = gen(d, scope, cubes);
    scope.pop_back();
    return body;
  };
  switch (pick(17)) {
    case 0: return leaf();
    case 1: {
      auto n = fresh();
      auto dom = sub();
      return make_surface(SurfaceKind::Pi, {}, n, {dom, under(n)});
    }
    case 2: return make_surface(SurfaceKind::Pi, {}, "", {sub(), sub()});
    case 3: {
      auto n = fresh();
      return make_surface(SurfaceKind::Lambda, {}, n, {under(n)});
    }
    case 4: return make_surface(SurfaceKind::App, {}, "", {sub(), sub()});
    case 5: {
      auto n = fresh();
      auto dom = sub();
      return make_surface(SurfaceKind::Sigma, {}, n, {dom, under(n)});
    }
    case 6: return make_surface(SurfaceKind::Sigma, {}, "", {sub(), sub()});
    case 7: return make_surface(SurfaceKind::Pair, {}, "", {sub(), sub()});
    case 8: return make_surface(pick(2) ? SurfaceKind::First : SurfaceKind::Second, {}, "", {sub()});
    case 9: return make_surface(SurfaceKind::Id, {}, "", {sub(), sub(), sub()});
    case 10: {
      std::vector<SurfacePtr> args;
      for (int i = 0; i < 6; ++i) args.push_back(sub());
      return make_surface(SurfaceKind::IdJ, {}, "", std::move(args));
    }
    case 11: {
      const int arity = 1 + pick(3);
      std::vector<std::string> names;
      for (int i = 0; i < arity; ++i) names.push_back(i == 0 ? "t" : i == 1 ? "s" : "r");
      auto inner = cubes;
      inner.insert(inner.end(), names.begin(), names.end());
      std::vector<SurfacePtr> children{make_surface(SurfaceKind::ShapeType, {}, "", {tope(2, inner)}, names),
                                       gen(d, scope, inner)};
      for (int i = pick(3); i > 0; --i) {
        children.push_back(tope(1, inner));
        children.push_back(gen(d, scope, inner));
      }
      return make_surface(SurfaceKind::ExtensionType, {}, "", std::move(children));
    }
    case 12: {
      std::vector<std::string> names{"t"};
      if (pick(2)) names.push_back("s");
      auto inner = cubes;
      inner.insert(inner.end(), names.begin(), names.end());
      return make_surface(SurfaceKind::ExtLambda, {}, "", {gen(d, scope, inner)}, names);
    }
    case 13: {
      std::vector<SurfacePtr> children{sub()};
      for (int i = 1 + pick(2); i > 0; --i) children.push_back(point(cubes));
      return make_surface(SurfaceKind::ExtApp, {}, "", std::move(children));
    }
    case 14: {
      std::vector<SurfacePtr> children;
      for (int i = 1 + pick(2); i > 0; --i) {
        children.push_back(tope(2, cubes));
        children.push_back(sub());
      }
      return make_surface(SurfaceKind::RecOr, {}, "", std::move(children));
    }
    case 15: return make_surface(SurfaceKind::Annot, {}, "", {sub(), sub()});
    default: return make_surface(SurfaceKind::Var, {}, scope[static_cast<std::size_t>(pick(static_cast<int>(scope.size())))]);
  }
}

}  // namespace sctt::testkit
