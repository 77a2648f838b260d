#include "archv/Lexer.hpp"

#include <array>
#include <cctype>

namespace archv {

namespace {

const std::array<const char*, 18> kReserved = {
    "package",   "component", "port",      "in",        "out",      "connect",
    "autoconnect", "variationPoint", "variant", "variantConfig", "realizes",
    "realizedBy", "for",      "extends",   "abstract",  "requires", "excludes",
    "constraint",
};

bool isNameStart(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool isNameChar(char c) { return std::isalnum(static_cast<unsigned char>(c)); }

class Cursor {
 public:
  Cursor(const std::string& file, const std::string& text) : file_(file), text_(text) {}

  bool atEnd() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }
  SourceLocation here() const { return {file_, line_, column_}; }

 private:
  const std::string& file_;
  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

std::string lexName(Cursor& cur) {
  std::string out;
  out += cur.advance();
  while (!cur.atEnd() && isNameChar(cur.peek())) out += cur.advance();
  return out;
}

}  // namespace

Identifier Token::toIdentifier() const {
  Identifier id(prefix, prefix.empty() ? text : text.substr(prefix.size() + 1));
  id.loc = loc;
  return id;
}

bool isReservedWord(const std::string& word) {
  for (const char* kw : kReserved)
    if (word == kw) return true;
  return false;
}

std::vector<Token> tokenize(const std::string& file, const std::string& content,
                            std::vector<Diagnostic>& diags) {
  std::vector<Token> tokens;
  Cursor cur(file, content);

  auto push = [&](TokenKind kind, std::string text, SourceLocation loc) {
    Token tok;
    tok.kind = kind;
    tok.text = std::move(text);
    tok.loc = std::move(loc);
    tokens.push_back(std::move(tok));
  };

  while (!cur.atEnd()) {
    char c = cur.peek();
    SourceLocation loc = cur.here();

    if (std::isspace(static_cast<unsigned char>(c))) {
      cur.advance();
      continue;
    }
    if (c == '/' && cur.peek(1) == '/') {
      while (!cur.atEnd() && cur.peek() != '\n') cur.advance();
      continue;
    }
    if (c == '/' && cur.peek(1) == '*') {
      cur.advance();
      cur.advance();
      bool closed = false;
      while (!cur.atEnd()) {
        if (cur.peek() == '*' && cur.peek(1) == '/') {
          cur.advance();
          cur.advance();
          closed = true;
          break;
        }
        cur.advance();
      }
      if (!closed) diags.push_back(makeError("SYN02", "unterminated block comment", loc));
      continue;
    }
    if (isNameStart(c)) {
      std::string name = lexName(cur);
      if (cur.peek() == '~') {
        SourceLocation tildeLoc = cur.here();
        cur.advance();
        if (!isNameStart(cur.peek())) {
          diags.push_back(makeError("SYN01", "expected a name after '~'", tildeLoc));
          continue;
        }
        std::string base = lexName(cur);
        if (isReservedWord(name) || isReservedWord(base)) {
          diags.push_back(
              makeError("SYN01", "reserved word used in a parametric name", loc));
          continue;
        }
        Token tok;
        tok.kind = TokenKind::Identifier;
        tok.prefix = name;
        tok.text = name + "~" + base;
        tok.loc = loc;
        tokens.push_back(std::move(tok));
        continue;
      }
      push(isReservedWord(name) ? TokenKind::Keyword : TokenKind::Identifier, name, loc);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (!cur.atEnd() && std::isdigit(static_cast<unsigned char>(cur.peek())))
        digits += cur.advance();
      Token tok;
      tok.kind = TokenKind::Integer;
      tok.text = digits;
      tok.value = std::stol(digits);
      tok.loc = loc;
      tokens.push_back(std::move(tok));
      continue;
    }

    switch (c) {
      case '{': cur.advance(); push(TokenKind::LBrace, "{", loc); continue;
      case '}': cur.advance(); push(TokenKind::RBrace, "}", loc); continue;
      case '(': cur.advance(); push(TokenKind::LParen, "(", loc); continue;
      case ')': cur.advance(); push(TokenKind::RParen, ")", loc); continue;
      case '[': cur.advance(); push(TokenKind::LBracket, "[", loc); continue;
      case ']': cur.advance(); push(TokenKind::RBracket, "]", loc); continue;
      case ';': cur.advance(); push(TokenKind::Semicolon, ";", loc); continue;
      case ',': cur.advance(); push(TokenKind::Comma, ",", loc); continue;
      case ':': cur.advance(); push(TokenKind::Colon, ":", loc); continue;
      case '.':
        cur.advance();
        if (cur.peek() == '.') {
          cur.advance();
          push(TokenKind::DotDot, "..", loc);
        } else {
          push(TokenKind::Dot, ".", loc);
        }
        continue;
      case '-':
        if (cur.peek(1) == '>') {
          cur.advance();
          cur.advance();
          push(TokenKind::Arrow, "->", loc);
          continue;
        }
        break;
      default:
        break;
    }
    cur.advance();
    diags.push_back(makeError("SYN01", std::string("unexpected character '") + c + "'", loc));
  }

  Token eof;
  eof.kind = TokenKind::EndOfFile;
  eof.loc = cur.here();
  tokens.push_back(std::move(eof));
  return tokens;
}

}  // namespace archv
