#include <set>

#include "sctt/syntax/surface.hpp"

namespace sctt::syntax {

SurfacePtr make_surface(SurfaceKind kind, Span span, std::string name, std::vector<SurfacePtr> children,
                        std::vector<std::string> binders) {
  return std::make_shared<const SurfaceTerm>(
      SurfaceTerm{kind, span, std::move(name), std::move(binders), std::move(children)});
}

namespace {

enum class BinderForm { None, Pi, Sigma };

class Parser {
public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

  std::vector<Declaration> module() {
    std::vector<Declaration> out;
    while (!at_end()) out.push_back(declaration());
    return out;
  }

  SurfacePtr whole_term() {
    auto t = term();
    if (!at_end()) fail({"end of input"});
    return t;
  }

  Sequent sequent() {
    Sequent s;
    while (!at_end() && peek().kind == TokenKind::Identifier) s.variables.push_back(name_token().text);
    expect_symbol("|-");
    s.hypothesis = tope();
    expect_symbol("=>");
    s.goal = tope();
    if (!at_end()) fail({"end of input"});
    return s;
  }

private:
  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= toks_.size(); }
  const Token& peek(std::size_t ahead = 0) const {
    static const Token eof{TokenKind::Symbol, "<eof>", {}};
    return pos_ + ahead < toks_.size() ? toks_[pos_ + ahead] : eof;
  }
  bool peek_symbol(std::string_view s, std::size_t ahead = 0) const {
    return pos_ + ahead < toks_.size() && toks_[pos_ + ahead].is_symbol(s);
  }
  bool peek_keyword(std::string_view s, std::size_t ahead = 0) const {
    return pos_ + ahead < toks_.size() && toks_[pos_ + ahead].is_keyword(s);
  }
  bool peek_word(std::string_view s) const {
    return !at_end() && peek().kind == TokenKind::Identifier && peek().text == s;
  }
  const Token& advance() { return toks_[pos_++]; }

  Span here() const {
    if (!at_end()) return toks_[pos_].span;
    const std::size_t end = toks_.empty() ? 0 : toks_.back().span.end;
    return {end, end};
  }
  std::size_t last_end() const { return pos_ == 0 ? 0 : toks_[pos_ - 1].span.end; }

  [[noreturn]] void fail(const std::set<std::string>& expected) const {
    std::string msg = "expected ";
    if (expected.size() > 1) msg += "one of ";
    bool first = true;
    for (const auto& e : expected) {
      if (!first) msg += ", ";
      msg += e;
      first = false;
    }
    msg += at_end() ? " but reached end of input" : " but found '" + peek().text + "'";
    throw Error(ErrorCode::ParseError, msg, here());
  }

  const Token& expect_symbol(std::string_view s) {
    if (!peek_symbol(s)) fail({"'" + std::string(s) + "'"});
    return advance();
  }

  const Token& name_token() {
    if (at_end() || peek().kind != TokenKind::Identifier || (is_reserved_word(peek().text) && peek().text != "_"))
      fail({"name"});
    return advance();
  }

  // ---- declarations ---------------------------------------------------------

  Declaration declaration() {
    const std::size_t start = here().start;
    Declaration d{};
    if (peek_keyword("#check")) {
      advance();
      d.kind = DeclKind::Check;
      d.body = term();
      expect_symbol(":");
      d.type = term();
      expect_symbol(";");
      d.span = {start, last_end()};
      return d;
    }
    if (peek_keyword("def")) {
      d.kind = DeclKind::Def;
    } else if (peek_keyword("postulate")) {
      d.kind = DeclKind::Postulate;
    } else {
      fail({"'def'", "'postulate'", "'#check'"});
    }
    advance();
    const Token& nm = name_token();
    if (nm.text == "_") throw Error(ErrorCode::ParseError, "declarations need a name", nm.span);
    d.name = nm.text;
    d.name_span = nm.span;
    while (peek_symbol("(") || peek_symbol("[")) params(d.params);
    expect_symbol(":");
    d.type = term();
    if (d.kind == DeclKind::Def) {
      expect_symbol(":=");
      d.body = term();
    }
    expect_symbol(";");
    d.span = {start, last_end()};
    return d;
  }

  void params(std::vector<Param>& out) {
    const std::size_t start = here().start;
    if (peek_symbol("[")) {
      advance();
      auto phi = tope();
      expect_symbol("]");
      out.push_back({"", Layer::Tope, phi, {start, last_end()}});
      return;
    }
    expect_symbol("(");
    std::vector<Token> names;
    do names.push_back(name_token());
    while (!at_end() && peek().kind == TokenKind::Identifier);
    expect_symbol(":");
    if (peek_keyword("2") && peek_symbol(")", 1)) {
      advance();
      advance();
      for (const auto& n : names) out.push_back({n.text, Layer::Cube, nullptr, n.span});
      return;
    }
    auto ty = term();
    expect_symbol(")");
    for (const auto& n : names) out.push_back({n.text, Layer::Type, ty, n.span});
  }

  // ---- terms ----------------------------------------------------------------

  SurfacePtr term() { return arrow(); }

  // "(" NAME+ ":" ... ")" followed by "->" or "*".
  BinderForm binder_ahead() const {
    if (!peek_symbol("(")) return BinderForm::None;
    std::size_t i = 1;
    while (pos_ + i < toks_.size() && toks_[pos_ + i].kind == TokenKind::Identifier) ++i;
    if (i == 1 || !peek_symbol(":", i)) return BinderForm::None;
    int depth = 0;
    for (std::size_t j = pos_; j < toks_.size(); ++j) {
      const auto& t = toks_[j];
      if (t.is_symbol("(")) ++depth;
      if (t.is_symbol(")") && --depth == 0) {
        if (j + 1 >= toks_.size()) return BinderForm::None;
        if (toks_[j + 1].is_symbol("->")) return BinderForm::Pi;
        if (toks_[j + 1].is_symbol("*")) return BinderForm::Sigma;
        return BinderForm::None;
      }
    }
    return BinderForm::None;
  }

  struct BinderGroup {
    std::vector<Token> names;
    SurfacePtr type;
  };

  BinderGroup binder_group() {
    BinderGroup g;
    expect_symbol("(");
    do g.names.push_back(name_token());
    while (!at_end() && peek().kind == TokenKind::Identifier);
    expect_symbol(":");
    g.type = term();
    expect_symbol(")");
    return g;
  }

  SurfacePtr close_binders(SurfaceKind kind, const BinderGroup& g, SurfacePtr body) {
    for (auto it = g.names.rbegin(); it != g.names.rend(); ++it)
      body = make_surface(kind, {it->span.start, body->span.end}, it->text, {g.type, body});
    return body;
  }

  SurfacePtr arrow() {
    if (peek_symbol("\\")) return lambda();
    const std::size_t start = here().start;
    if (binder_ahead() == BinderForm::Pi) {
      auto g = binder_group();
      expect_symbol("->");
      auto body = arrow();
      auto out = close_binders(SurfaceKind::Pi, g, body);
      return make_surface(SurfaceKind::Pi, {start, out->span.end}, out->name, out->children);
    }
    auto lhs = sigma();
    if (peek_symbol("->")) {
      advance();
      auto rhs = arrow();
      return make_surface(SurfaceKind::Pi, {lhs->span.start, rhs->span.end}, "", {lhs, rhs});
    }
    return lhs;
  }

  SurfacePtr sigma() {
    const std::size_t start = here().start;
    if (binder_ahead() == BinderForm::Sigma) {
      auto g = binder_group();
      expect_symbol("*");
      auto body = sigma();
      auto out = close_binders(SurfaceKind::Sigma, g, body);
      return make_surface(SurfaceKind::Sigma, {start, out->span.end}, out->name, out->children);
    }
    auto lhs = equality();
    if (peek_symbol("*")) {
      advance();
      auto rhs = sigma();
      return make_surface(SurfaceKind::Sigma, {lhs->span.start, rhs->span.end}, "", {lhs, rhs});
    }
    return lhs;
  }

  SurfacePtr equality() {
    auto lhs = application();
    if (!peek_symbol("=_{")) return lhs;
    advance();
    auto ty = term();
    expect_symbol("}");
    auto rhs = application();
    if (peek_symbol("=_{")) throw Error(ErrorCode::ParseError, "identity types do not associate; add parentheses", here());
    return make_surface(SurfaceKind::Id, {lhs->span.start, rhs->span.end}, "", {ty, lhs, rhs});
  }

  bool atom_start() const {
    if (at_end()) return false;
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Identifier: return true;
      case TokenKind::Endpoint: return true;
      case TokenKind::Keyword: return t.text == "U" || t.text == "2" || t.text == "TOP" || t.text == "BOT";
      case TokenKind::Symbol: return t.text == "(" || t.text == "<" || t.text == "?" || t.text == "\\";
    }
    return false;
  }

  SurfacePtr application() {
    auto head = atom();
    while (true) {
      if (peek_symbol("@")) {
        advance();
        expect_symbol("(");
        std::vector<SurfacePtr> children{head};
        do {
          if (children.size() > 1) expect_symbol(",");
          children.push_back(interval_term());
        } while (peek_symbol(","));
        expect_symbol(")");
        head = make_surface(SurfaceKind::ExtApp, {head->span.start, last_end()}, "", std::move(children));
      } else if (atom_start()) {
        auto arg = atom();
        head = make_surface(SurfaceKind::App, {head->span.start, arg->span.end}, "", {head, arg});
      } else {
        return head;
      }
    }
  }

  SurfacePtr lambda() {
    const std::size_t start = expect_symbol("\\").span.start;
    if (peek_symbol("{")) {
      advance();
      std::vector<std::string> names;
      do names.push_back(name_token().text);
      while (!at_end() && peek().kind == TokenKind::Identifier);
      expect_symbol("}");
      expect_symbol("->");
      auto body = arrow();
      return make_surface(SurfaceKind::ExtLambda, {start, body->span.end}, "", {body}, std::move(names));
    }
    std::vector<Token> names;
    do names.push_back(name_token());
    while (!at_end() && peek().kind == TokenKind::Identifier);
    expect_symbol("->");
    auto body = arrow();
    for (std::size_t i = names.size(); i-- > 0;) {
      const std::size_t s = i == 0 ? start : names[i].span.start;
      body = make_surface(SurfaceKind::Lambda, {s, body->span.end}, names[i].text, {body});
    }
    return body;
  }

  SurfacePtr atom() {
    if (!atom_start()) fail({"term"});
    const Token& t = peek();
    const Span sp = t.span;
    if (t.kind == TokenKind::Endpoint) {
      advance();
      return make_surface(SurfaceKind::Endpoint, sp, t.text);
    }
    if (t.kind == TokenKind::Keyword) {
      advance();
      if (t.text == "U") return make_surface(SurfaceKind::Universe, sp);
      if (t.text == "2") return make_surface(SurfaceKind::Cube2, sp);
      return make_surface(SurfaceKind::TopeAtom, sp, t.text);
    }
    if (t.kind == TokenKind::Identifier) {
      if (t.text == "refl") {
        advance();
        return make_surface(SurfaceKind::Refl, sp);
      }
      if (t.text == "first" || t.text == "second") {
        advance();
        const auto kind = t.text == "first" ? SurfaceKind::First : SurfaceKind::Second;
        if (!atom_start()) return make_surface(kind, sp);
        auto arg = atom();
        return make_surface(kind, {sp.start, arg->span.end}, "", {arg});
      }
      if (t.text == "idJ") {
        advance();
        expect_symbol("(");
        std::vector<SurfacePtr> args;
        for (int i = 0; i < 6; ++i) {
          if (i > 0) expect_symbol(",");
          args.push_back(term());
        }
        expect_symbol(")");
        return make_surface(SurfaceKind::IdJ, {sp.start, last_end()}, "", std::move(args));
      }
      if (t.text == "recOR") {
        advance();
        expect_symbol("(");
        std::vector<SurfacePtr> args;
        do {
          if (!args.empty()) expect_symbol(",");
          args.push_back(tope());
          expect_symbol("|->");
          args.push_back(term());
        } while (peek_symbol(","));
        expect_symbol(")");
        return make_surface(SurfaceKind::RecOr, {sp.start, last_end()}, "", std::move(args));
      }
      const Token& nm = name_token();
      if (nm.text == "_") throw Error(ErrorCode::ParseError, "'_' cannot be used as a term", nm.span);
      return make_surface(SurfaceKind::Var, sp, nm.text);
    }
    if (t.is_symbol("?")) {
      advance();
      return make_surface(SurfaceKind::Hole, sp);
    }
    if (t.is_symbol("\\")) return lambda();
    if (t.is_symbol("<")) return extension_type();
    // "(" term ")" | "(" term "," term ")" | "(" term ":" term ")"
    advance();
    auto inner = term();
    if (peek_symbol(",")) {
      advance();
      auto snd = term();
      expect_symbol(")");
      return make_surface(SurfaceKind::Pair, {sp.start, last_end()}, "", {inner, snd});
    }
    if (peek_symbol(":")) {
      advance();
      auto ty = term();
      expect_symbol(")");
      return make_surface(SurfaceKind::Annot, {sp.start, last_end()}, "", {inner, ty});
    }
    if (!peek_symbol(")")) fail({"')'", "','", "':'"});
    advance();
    return inner;
  }

  SurfacePtr extension_type() {
    const std::size_t start = expect_symbol("<").span.start;
    const std::size_t shape_start = expect_symbol("{").span.start;
    std::vector<std::string> names;
    do names.push_back(name_token().text);
    while (!at_end() && peek().kind == TokenKind::Identifier);
    expect_symbol(":");
    const Span cube_start = here();
    std::size_t arity = 0;
    do {
      if (arity > 0) expect_symbol("*");
      if (!peek_keyword("2")) fail({"'2'"});
      advance();
      ++arity;
    } while (peek_symbol("*"));
    if (arity != names.size())
      throw Error(ErrorCode::ParseError,
                  "cube 2" + std::string(arity > 1 ? "^" + std::to_string(arity) : "") + " does not match " +
                      std::to_string(names.size()) + " bound variable(s)",
                  {cube_start.start, last_end()});
    expect_symbol("|");
    auto psi = tope();
    expect_symbol("}");
    auto shape = make_surface(SurfaceKind::ShapeType, {shape_start, last_end()}, "", {psi}, names);
    expect_symbol("->");
    auto body = term();
    std::vector<SurfacePtr> children{shape, body};
    if (peek_symbol("[")) {
      advance();
      do {
        if (children.size() > 2) expect_symbol(",");
        children.push_back(tope());
        expect_symbol("|->");
        children.push_back(term());
      } while (peek_symbol(","));
      expect_symbol("]");
    }
    expect_symbol(">");
    return make_surface(SurfaceKind::ExtensionType, {start, last_end()}, "", std::move(children));
  }

  // ---- topes ----------------------------------------------------------------

  SurfacePtr tope() {
    auto lhs = tope_conj();
    while (peek_symbol("\\/")) {
      advance();
      auto rhs = tope_conj();
      lhs = make_surface(SurfaceKind::TopeConn, {lhs->span.start, rhs->span.end}, "\\/", {lhs, rhs});
    }
    return lhs;
  }

  SurfacePtr tope_conj() {
    auto lhs = tope_atom();
    while (peek_symbol("/\\")) {
      advance();
      auto rhs = tope_atom();
      lhs = make_surface(SurfaceKind::TopeConn, {lhs->span.start, rhs->span.end}, "/\\", {lhs, rhs});
    }
    return lhs;
  }

  SurfacePtr tope_atom() {
    if (peek_keyword("TOP") || peek_keyword("BOT")) {
      const Token& t = advance();
      return make_surface(SurfaceKind::TopeAtom, t.span, t.text);
    }
    if (peek_symbol("(")) {
      advance();
      auto inner = tope();
      expect_symbol(")");
      return inner;
    }
    if (at_end() || (peek().kind != TokenKind::Identifier && peek().kind != TokenKind::Endpoint))
      fail({"tope", "'TOP'", "'BOT'", "'('"});
    auto lhs = interval_term();
    std::string op;
    if (peek_symbol("<=") || peek_symbol("===")) {
      op = advance().text;
    } else {
      fail({"'<='", "'==='"});
    }
    auto rhs = interval_term();
    return make_surface(SurfaceKind::TopeAtom, {lhs->span.start, rhs->span.end}, op, {lhs, rhs});
  }

  SurfacePtr interval_term() {
    if (!at_end() && peek().kind == TokenKind::Endpoint) {
      const Token& t = advance();
      return make_surface(SurfaceKind::Endpoint, t.span, t.text);
    }
    if (at_end() || peek().kind != TokenKind::Identifier) fail({"cube variable", "'0'", "'1'"});
    const Token& t = name_token();
    return make_surface(SurfaceKind::Var, t.span, t.text);
  }
};

}  // namespace

std::vector<Declaration> parse_module(const std::vector<Token>& tokens) { return Parser(tokens).module(); }

SurfacePtr parse_term(const std::vector<Token>& tokens) { return Parser(tokens).whole_term(); }

Sequent parse_sequent(const std::vector<Token>& tokens) { return Parser(tokens).sequent(); }

}  // namespace sctt::syntax
