#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sctt/diagnostics.hpp"

namespace sctt::syntax {

enum class TokenKind { Identifier, Keyword, Symbol, Endpoint };

struct Token {
  TokenKind kind;
  std::string text;
  Span span;

  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
  bool is_symbol(std::string_view t) const { return is(TokenKind::Symbol, t); }
  bool is_keyword(std::string_view t) const { return is(TokenKind::Keyword, t); }
  friend bool operator==(const Token&, const Token&) = default;
};

std::string_view token_kind_name(TokenKind k);

// Splits `source` into tokens. Whitespace and "--" line comments are
// skipped. Throws Error(LexError) at the first character outside the
// alphabet.
std::vector<Token> tokenize(std::string_view source);

// Words the parser treats as built-in forms rather than names. They are
// lexed as identifiers.
bool is_reserved_word(std::string_view word);

}  // namespace sctt::syntax
