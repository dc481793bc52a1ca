#include <gtest/gtest.h>

#include "sctt/syntax/token.hpp"

using namespace sctt;
using namespace sctt::syntax;

namespace {

std::vector<std::pair<TokenKind, std::string>> kinds(std::string_view src) {
  std::vector<std::pair<TokenKind, std::string>> out;
  for (const auto& t : tokenize(src)) out.emplace_back(t.kind, t.text);
  return out;
}

}  // namespace

TEST(Lexer, ReflIsAnIdentifier) {
  using P = std::pair<TokenKind, std::string>;
  EXPECT_EQ(kinds("refl"), (std::vector<P>{{TokenKind::Identifier, "refl"}}));
}

TEST(Lexer, CubeBinder) {
  using P = std::pair<TokenKind, std::string>;
  EXPECT_EQ(kinds("(t : 2)"), (std::vector<P>{{TokenKind::Symbol, "("},
                                              {TokenKind::Identifier, "t"},
                                              {TokenKind::Symbol, ":"},
                                              {TokenKind::Keyword, "2"},
                                              {TokenKind::Symbol, ")"}}));
}

TEST(Lexer, IdentityType) {
  using P = std::pair<TokenKind, std::string>;
  EXPECT_EQ(kinds("x =_{A} y"), (std::vector<P>{{TokenKind::Identifier, "x"},
                                                {TokenKind::Symbol, "=_{"},
                                                {TokenKind::Identifier, "A"},
                                                {TokenKind::Symbol, "}"},
                                                {TokenKind::Identifier, "y"}}));
}

TEST(Lexer, EndpointsAreTheOnlyNumerals) {
  auto ts = tokenize("0 1");
  ASSERT_EQ(ts.size(), 2u);
  EXPECT_EQ(ts[0].kind, TokenKind::Endpoint);
  EXPECT_EQ(ts[1].kind, TokenKind::Endpoint);
  // "2" is the interval; other digits are not tokens on their own.
  EXPECT_EQ(tokenize("2")[0].kind, TokenKind::Keyword);
  EXPECT_THROW(tokenize("3"), Error);
}

TEST(Lexer, NamesWithPrimesAndDigits) {
  auto ts = tokenize("f' g_1 x2");
  ASSERT_EQ(ts.size(), 3u);
  for (const auto& t : ts) EXPECT_EQ(t.kind, TokenKind::Identifier);
  EXPECT_EQ(ts[0].text, "f'");
}

TEST(Lexer, TokensAndGapsReconstructTheSource) {
  const std::string src = "def id (A : U) : A -> A := \\a -> a ; -- trailing\n#check U : U ;\n";
  auto ts = tokenize(src);
  std::size_t pos = 0;
  for (const auto& t : ts) {
    ASSERT_LE(pos, t.span.start);
    // The gap holds only whitespace and comments.
    const std::string gap = src.substr(pos, t.span.start - pos);
    for (std::size_t i = 0; i < gap.size(); ++i) {
      if (gap.compare(i, 2, "--") == 0) {
        i = gap.find('\n', i);
        if (i == std::string::npos) break;
        continue;
      }
      EXPECT_TRUE(std::isspace(static_cast<unsigned char>(gap[i]))) << "gap " << gap;
    }
    EXPECT_EQ(src.substr(t.span.start, t.span.end - t.span.start), t.text);
    pos = t.span.end;
  }
}

TEST(Lexer, CommentsRunToEndOfLine) {
  auto ts = tokenize("U -- ignored U U\nU");
  EXPECT_EQ(ts.size(), 2u);
}

TEST(Lexer, ReportsFirstOffender) {
  try {
    tokenize("def a : U := U $ % ;");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LexError);
    EXPECT_EQ(e.span().start, 15u);
    EXPECT_EQ(e.span().end, 16u);
  }
}

TEST(Lexer, MultiByteCharacterIsOneOffender) {
  try {
    tokenize("A \xE2\x86\x92 A");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LexError);
    EXPECT_EQ(e.span().start, 2u);
    EXPECT_EQ(e.span().end, 5u);
  }
}

TEST(Lexer, Deterministic) { EXPECT_EQ(tokenize("<{t : 2 | t <= 1} -> A>"), tokenize("<{t : 2 | t <= 1} -> A>")); }

TEST(Lexer, ReservedWords) {
  for (const char* w : {"refl", "idJ", "first", "second", "recOR", "_"}) EXPECT_TRUE(is_reserved_word(w)) << w;
  EXPECT_FALSE(is_reserved_word("concat"));
}
