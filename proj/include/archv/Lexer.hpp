#ifndef ARCHV_LEXER_HPP
#define ARCHV_LEXER_HPP

#include <string>
#include <vector>

#include "archv/Ast.hpp"

namespace archv {

enum class TokenKind {
  Identifier,   // possibly parametric (prefix~name)
  Integer,
  Keyword,
  LBrace,
  RBrace,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Semicolon,
  Comma,
  Dot,
  DotDot,
  Colon,
  Arrow,
  EndOfFile,
};

struct Token {
  TokenKind kind = TokenKind::EndOfFile;
  std::string text;      // keyword or identifier text (parametric rendered with ~)
  std::string prefix;    // parameter prefix for parametric identifiers
  long value = 0;        // for Integer
  SourceLocation loc;

  bool is(TokenKind k) const { return kind == k; }
  bool isKeyword(const char* kw) const { return kind == TokenKind::Keyword && text == kw; }
  Identifier toIdentifier() const;
};

/// Splits a source text into tokens. Never fails: unexpected characters
/// become diagnostics and are skipped so parsing can continue.
std::vector<Token> tokenize(const std::string& file, const std::string& content,
                            std::vector<Diagnostic>& diags);

bool isReservedWord(const std::string& word);

}  // namespace archv

#endif
