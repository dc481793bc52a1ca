#include <algorithm>
#include <array>

#include "sctt/syntax/token.hpp"

namespace sctt::syntax {

namespace {

constexpr std::array<std::string_view, 5> kKeywords = {"def", "postulate", "U", "TOP", "BOT"};
constexpr std::array<std::string_view, 6> kReserved = {"refl", "idJ", "first", "second", "recOR", "_"};

// Longest match first.
constexpr std::array<std::string_view, 27> kSymbols = {
    "|->", "===", "=_{", "|-", "=>", ":=", "->", "<=", "/\\", "\\/", "|", ":", "<", ">",
    "\\",  "(",   ")",   "[",  "]",  "{",  "}",  ",",  ";",   "*",   "@", "?", "#check"};

bool is_name_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_name_char(char c) { return is_name_start(c) || is_digit(c) || c == '\''; }

std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 1;
}

}  // namespace

std::string_view token_kind_name(TokenKind k) {
  switch (k) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Symbol: return "symbol";
    case TokenKind::Endpoint: return "endpoint";
  }
  return "token";
}

bool is_reserved_word(std::string_view word) {
  return std::find(kReserved.begin(), kReserved.end(), word) != kReserved.end() ||
         std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = src.size();
  while (i < n) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < n && src[i + 1] == '-') {
      while (i < n && src[i] != '\n') ++i;
      continue;
    }
    if (is_name_start(c)) {
      std::size_t j = i + 1;
      while (j < n && is_name_char(src[j])) ++j;
      std::string text(src.substr(i, j - i));
      const bool kw = std::find(kKeywords.begin(), kKeywords.end(), text) != kKeywords.end();
      out.push_back({kw ? TokenKind::Keyword : TokenKind::Identifier, std::move(text), {i, j}});
      i = j;
      continue;
    }
    if (is_digit(c)) {
      std::size_t j = i + 1;
      while (j < n && is_name_char(src[j])) ++j;
      if (j != i + 1 || c > '2')
        throw Error(ErrorCode::LexError, "numeral '" + std::string(src.substr(i, j - i)) + "' is not part of the language",
                    {i, j});
      out.push_back({c == '2' ? TokenKind::Keyword : TokenKind::Endpoint, std::string(1, c), {i, j}});
      i = j;
      continue;
    }
    bool matched = false;
    for (auto sym : kSymbols) {
      if (src.substr(i, sym.size()) == sym) {
        out.push_back({sym == "#check" ? TokenKind::Keyword : TokenKind::Symbol, std::string(sym), {i, i + sym.size()}});
        i += sym.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    const std::size_t len = std::min(utf8_length(static_cast<unsigned char>(c)), n - i);
    throw Error(ErrorCode::LexError, "unexpected character '" + std::string(src.substr(i, len)) + "'", {i, i + len});
  }
  return out;
}

}  // namespace sctt::syntax
