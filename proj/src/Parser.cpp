#include "archv/Parser.hpp"

#include <cassert>

#include "archv/Lexer.hpp"

namespace archv {

namespace {

/// Recursive-descent parser with statement-level recovery: after an error
/// it skips to the next `;` or `}` and resumes.
class Parser {
 public:
  Parser(const SourceFile& source, std::vector<Diagnostic>& diags)
      : diags_(diags) {
    tokens_ = tokenize(source.path, source.content, diags_);
  }

  ComponentDef parseComponentTop() {
    QualifiedName package = parsePackageHeader();
    ComponentDef def;
    if (!at(TokenKind::Keyword, "component")) {
      error("expected 'component'");
      return def;
    }
    def = parseComponentDef();
    def.package = package;
    checkTrailing();
    return def;
  }

  // Returns exactly one of the two.
  std::pair<std::optional<VariantDef>, std::optional<VariantConfig>> parseVariantTop() {
    QualifiedName package = parsePackageHeader();
    std::pair<std::optional<VariantDef>, std::optional<VariantConfig>> out;
    if (at(TokenKind::Keyword, "variant")) {
      VariantDef def = parseVariantDef();
      def.package = package;
      out.first = std::move(def);
    } else if (at(TokenKind::Keyword, "variantConfig") || at(TokenKind::Keyword, "abstract")) {
      VariantConfig cfg = parseVariantConfig();
      cfg.package = package;
      out.second = std::move(cfg);
    } else {
      error("expected 'variant' or 'variantConfig'");
      return out;
    }
    checkTrailing();
    return out;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  const Token& advance() {
    const Token& tok = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return tok;
  }
  bool at(TokenKind kind) const { return peek().is(kind); }
  bool at(TokenKind kind, const char* kw) const { return peek().isKeyword(kw); }
  bool accept(TokenKind kind) {
    if (!at(kind)) return false;
    advance();
    return true;
  }
  bool acceptKeyword(const char* kw) {
    if (!peek().isKeyword(kw)) return false;
    advance();
    return true;
  }

  void error(const std::string& message) { errorAt(peek().loc, message); }
  void errorAt(SourceLocation loc, const std::string& message) {
    diags_.push_back(makeError("SYN01", message, std::move(loc)));
  }

  bool expect(TokenKind kind, const char* what) {
    if (accept(kind)) return true;
    error(std::string("expected ") + what);
    return false;
  }
  bool expectKeyword(const char* kw) {
    if (acceptKeyword(kw)) return true;
    error(std::string("expected '") + kw + "'");
    return false;
  }

  /// Skip to just past the next ';', or stop before '}' / end of file.
  void synchronize() {
    while (!at(TokenKind::EndOfFile) && !at(TokenKind::RBrace)) {
      if (advance().is(TokenKind::Semicolon)) return;
    }
  }

  Identifier parseIdentifier(const char* what, bool allowParametric) {
    if (!at(TokenKind::Identifier)) {
      error(std::string("expected ") + what);
      return Identifier();
    }
    Token tok = advance();
    if (!tok.prefix.empty() && !allowParametric) {
      diags_.push_back(makeError("SYN05", "parametric name not allowed here", tok.loc));
      Identifier id(tok.text.substr(tok.prefix.size() + 1));
      id.loc = tok.loc;
      return id;
    }
    return tok.toIdentifier();
  }

  QualifiedName parseQualifiedName(const char* what, bool allowParametric) {
    QualifiedName qn;
    qn.segments.push_back(parseIdentifier(what, allowParametric));
    while (at(TokenKind::Dot)) {
      advance();
      qn.segments.push_back(parseIdentifier("a name after '.'", allowParametric));
    }
    return qn;
  }

  QualifiedName parsePackageHeader() {
    QualifiedName package;
    if (acceptKeyword("package")) {
      package = parseQualifiedName("a package name", false);
      expect(TokenKind::Semicolon, "';' after the package name");
    }
    return package;
  }

  void checkTrailing() {
    if (!at(TokenKind::EndOfFile)) {
      diags_.push_back(makeError("SYN04", "only one definition is allowed per file", peek().loc));
    }
  }

  // Collects body elements; a variant body routes selections and misplaced
  // variation points to its own lists.
  struct BodySink {
    AutoconnectMode* autoconnect = nullptr;
    std::vector<PortDecl>* ports = nullptr;
    std::vector<SubcomponentDecl>* subcomponents = nullptr;
    std::vector<ComponentDef>* innerComponents = nullptr;
    std::vector<ConnectorDecl>* connectors = nullptr;
    std::vector<VariationPointDecl>* variationPoints = nullptr;
    std::vector<VariantSelection>* selections = nullptr;
  };

  ComponentDef parseComponentDef() {
    ComponentDef def;
    def.loc = peek().loc;
    expectKeyword("component");
    def.name = parseIdentifier("a component name", false);
    if (!expect(TokenKind::LBrace, "'{'")) {
      synchronize();
      return def;
    }
    BodySink sink;
    sink.autoconnect = &def.autoconnect;
    sink.ports = &def.ports;
    sink.subcomponents = &def.subcomponents;
    sink.innerComponents = &def.innerComponents;
    sink.connectors = &def.connectors;
    sink.variationPoints = &def.variationPoints;
    parseBody(sink, /*inVariant=*/false);
    return def;
  }

  void parseBody(BodySink& sink, bool inVariant) {
    int declIndex = 0;
    while (!at(TokenKind::RBrace) && !at(TokenKind::EndOfFile)) {
      if (acceptKeyword("autoconnect")) {
        parseAutoconnect(sink);
        continue;
      }
      if (at(TokenKind::Keyword, "port")) {
        parsePortStatement(sink, inVariant, declIndex);
        continue;
      }
      if (at(TokenKind::Keyword, "component")) {
        parseComponentStatement(sink, inVariant, declIndex);
        continue;
      }
      if (at(TokenKind::Keyword, "connect")) {
        parseConnectStatement(sink, inVariant, declIndex);
        continue;
      }
      if (at(TokenKind::Keyword, "variationPoint")) {
        parseVariationPointStatement(sink, declIndex);
        continue;
      }
      if (at(TokenKind::Identifier) && sink.selections) {
        parseSelectionStatement(*sink.selections, inVariant, declIndex);
        continue;
      }
      error("expected a declaration");
      synchronize();
    }
    expect(TokenKind::RBrace, "'}'");
  }

  void parseAutoconnect(BodySink& sink) {
    if (acceptKeyword("port")) {
      *sink.autoconnect = AutoconnectMode::Port;
    } else if (at(TokenKind::Identifier) && peek().text == "type") {
      advance();
      *sink.autoconnect = AutoconnectMode::Type;
    } else {
      error("expected 'port' or 'type' after 'autoconnect'");
      synchronize();
      return;
    }
    expect(TokenKind::Semicolon, "';'");
  }

  void parsePortStatement(BodySink& sink, bool inVariant, int& declIndex) {
    expectKeyword("port");
    do {
      PortDecl port;
      port.loc = peek().loc;
      if (acceptKeyword("in")) {
        port.direction = PortDirection::In;
      } else if (acceptKeyword("out")) {
        port.direction = PortDirection::Out;
      } else {
        error("expected 'in' or 'out'");
        synchronize();
        return;
      }
      port.type = parseIdentifier("a port type", false);
      if (at(TokenKind::Identifier)) {
        port.name = parseIdentifier("a port name", inVariant);
      } else {
        port.name = port.type;
        port.implicitName = true;
      }
      port.declIndex = declIndex++;
      sink.ports->push_back(std::move(port));
    } while (accept(TokenKind::Comma));
    expect(TokenKind::Semicolon, "';'");
  }

  void parseComponentStatement(BodySink& sink, bool inVariant, int& declIndex) {
    // Lookahead past the type name decides between an inner definition,
    // explicitly named instances, and an implicit instance.
    SourceLocation loc = peek().loc;
    expectKeyword("component");
    QualifiedName type = parseQualifiedName("a component type", false);
    if (at(TokenKind::LBrace)) {
      if (type.size() != 1) {
        errorAt(loc, "an inner component definition takes a simple name");
      }
      ComponentDef inner;
      inner.loc = loc;
      inner.name = type.segments.front();
      BodySink innerSink;
      innerSink.autoconnect = &inner.autoconnect;
      innerSink.ports = &inner.ports;
      innerSink.subcomponents = &inner.subcomponents;
      innerSink.innerComponents = &inner.innerComponents;
      innerSink.connectors = &inner.connectors;
      innerSink.variationPoints = &inner.variationPoints;
      advance();  // '{'
      parseBody(innerSink, false);
      inner.declIndex = declIndex++;
      sink.innerComponents->push_back(std::move(inner));
      return;
    }

    SubcomponentDecl decl;
    decl.loc = loc;
    decl.type = std::move(type);
    if (at(TokenKind::Identifier)) {
      decl.instances.push_back(parseIdentifier("an instance name", inVariant));
      while (accept(TokenKind::Comma)) {
        decl.instances.push_back(parseIdentifier("an instance name", inVariant));
      }
    } else {
      decl.implicitNames = true;
      Identifier implicit = decl.type.segments.back();
      implicit.loc = loc;
      decl.instances.push_back(std::move(implicit));
    }
    decl.declIndex = declIndex++;
    sink.subcomponents->push_back(std::move(decl));
    expect(TokenKind::Semicolon, "';'");
  }

  ConnectorEnd parseConnectorEnd(bool inVariant) {
    ConnectorEnd end;
    QualifiedName path = parseQualifiedName("a port reference", inVariant);
    if (path.size() == 1) {
      end.port = path.segments[0];
    } else if (path.size() == 2) {
      end.component = path.segments[0];
      end.port = path.segments[1];
    } else {
      errorAt(path.loc(), "a port reference names a port or subcomponent.port");
      end.component = path.segments[0];
      end.port = path.segments.back();
    }
    return end;
  }

  void parseConnectStatement(BodySink& sink, bool inVariant, int& declIndex) {
    ConnectorDecl decl;
    decl.loc = peek().loc;
    expectKeyword("connect");
    decl.source = parseConnectorEnd(inVariant);
    if (!expect(TokenKind::Arrow, "'->'")) {
      synchronize();
      return;
    }
    decl.targets.push_back(parseConnectorEnd(inVariant));
    while (accept(TokenKind::Comma)) {
      decl.targets.push_back(parseConnectorEnd(inVariant));
    }
    decl.declIndex = declIndex++;
    sink.connectors->push_back(std::move(decl));
    expect(TokenKind::Semicolon, "';'");
  }

  void parseVariationPointStatement(BodySink& sink, int& declIndex) {
    VariationPointDecl decl;
    decl.loc = peek().loc;
    expectKeyword("variationPoint");
    expect(TokenKind::Colon, "':'");
    decl.name = parseIdentifier("a variation point name", false);
    if (at(TokenKind::LBracket)) {
      SourceLocation loc = peek().loc;
      advance();
      long lo = 0, hi = 0;
      bool ok = true;
      if (at(TokenKind::Integer)) {
        lo = advance().value;
      } else {
        ok = false;
      }
      ok = ok && accept(TokenKind::DotDot);
      if (ok && at(TokenKind::Integer)) {
        hi = advance().value;
      } else {
        ok = false;
      }
      ok = ok && accept(TokenKind::RBracket);
      if (!ok || lo > hi || hi < 1) {
        diags_.push_back(makeError("SYN03", "invalid cardinality", loc));
        synchronize();
        return;
      }
      decl.cardinality = Cardinality{static_cast<int>(lo), static_cast<int>(hi)};
      decl.explicitCardinality = true;
    }
    decl.declIndex = declIndex++;
    sink.variationPoints->push_back(std::move(decl));
    expect(TokenKind::Semicolon, "';'");
  }

  void parseSelectionStatement(std::vector<VariantSelection>& out, bool inVariant,
                               int& declIndex) {
    VariantSelection sel;
    sel.loc = peek().loc;
    // Selection paths may traverse parametric instance names in variant
    // bodies and in configurations alike.
    sel.variationPoint = parseQualifiedName("a variation point path", true);
    if (!expectKeyword("realizedBy")) {
      synchronize();
      return;
    }
    sel.variant = parseIdentifier("a variant name", false);
    if (accept(TokenKind::LParen)) {
      do {
        sel.actuals.push_back(parseIdentifier("an actual parameter", inVariant));
      } while (accept(TokenKind::Comma));
      expect(TokenKind::RParen, "')'");
    }
    sel.declIndex = declIndex++;
    out.push_back(std::move(sel));
    expect(TokenKind::Semicolon, "';'");
  }

  void parseConstraintClause(std::vector<ConstraintClause>& out) {
    ConstraintClause clause;
    clause.loc = peek().loc;
    clause.kind = peek().isKeyword("requires") ? ConstraintKind::Requires
                                               : ConstraintKind::Excludes;
    advance();
    clause.target = parseQualifiedName("a variation point and variant", false);
    out.push_back(std::move(clause));
  }

  VariantDef parseVariantDef() {
    VariantDef def;
    def.loc = peek().loc;
    expectKeyword("variant");
    def.name = parseIdentifier("a variant name", false);
    if (accept(TokenKind::LParen)) {
      do {
        def.formalParameters.push_back(parseIdentifier("a parameter name", false));
      } while (accept(TokenKind::Comma));
      expect(TokenKind::RParen, "')'");
    }
    expectKeyword("realizes");
    def.realizes = parseQualifiedName("a variation point path", false);
    // Constraint clauses appear bare or wrapped in constraint( ... ).
    while (true) {
      if (at(TokenKind::Keyword, "requires") || at(TokenKind::Keyword, "excludes")) {
        parseConstraintClause(def.constraints);
        continue;
      }
      if (acceptKeyword("constraint")) {
        expect(TokenKind::LParen, "'('");
        while (at(TokenKind::Keyword, "requires") || at(TokenKind::Keyword, "excludes")) {
          parseConstraintClause(def.constraints);
          accept(TokenKind::Comma);
        }
        expect(TokenKind::RParen, "')'");
        continue;
      }
      break;
    }
    if (!expect(TokenKind::LBrace, "'{'")) {
      synchronize();
      return def;
    }
    BodySink sink;
    sink.autoconnect = &def.autoconnect;
    sink.ports = &def.ports;
    sink.subcomponents = &def.subcomponents;
    sink.innerComponents = &def.innerComponents;
    sink.connectors = &def.connectors;
    sink.variationPoints = &def.misplacedVariationPoints;
    sink.selections = &def.selections;
    parseBody(sink, /*inVariant=*/true);
    return def;
  }

  VariantConfig parseVariantConfig() {
    VariantConfig cfg;
    cfg.loc = peek().loc;
    if (acceptKeyword("abstract")) cfg.abstract = true;
    expectKeyword("variantConfig");
    cfg.name = parseIdentifier("a configuration name", false);
    expectKeyword("for");
    cfg.target = parseQualifiedName("a component name", false);
    if (acceptKeyword("extends")) {
      cfg.superConfig = parseQualifiedName("a configuration name", false);
    }
    if (!expect(TokenKind::LBrace, "'{'")) {
      synchronize();
      return cfg;
    }
    int declIndex = 0;
    while (!at(TokenKind::RBrace) && !at(TokenKind::EndOfFile)) {
      if (at(TokenKind::Identifier)) {
        parseSelectionStatement(cfg.selections, false, declIndex);
        continue;
      }
      error("expected a variant selection");
      synchronize();
    }
    expect(TokenKind::RBrace, "'}'");
    return cfg;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic>& diags_;
};

void finalizeDiagnostics(std::vector<Diagnostic>& diags) { sortDiagnostics(diags); }

}  // namespace

std::optional<SourceFile::Kind> kindForPath(const std::string& path) {
  auto endsWith = [&](const char* suffix) {
    std::string s(suffix);
    return path.size() >= s.size() && path.compare(path.size() - s.size(), s.size(), s) == 0;
  };
  if (endsWith(".archv")) return SourceFile::Kind::VariantOrConfig;
  if (endsWith(".arc")) return SourceFile::Kind::Component;
  return std::nullopt;
}

ParseResult parseComponentFile(const SourceFile& source) {
  assert(source.kind == SourceFile::Kind::Component);
  ParseResult result;
  Parser parser(source, result.diagnostics);
  ComponentDef def = parser.parseComponentTop();
  if (!def.name.empty()) {
    result.component = std::move(def);
  }
  finalizeDiagnostics(result.diagnostics);
  return result;
}

ParseResult parseVariantFile(const SourceFile& source) {
  assert(source.kind == SourceFile::Kind::VariantOrConfig);
  ParseResult result;
  Parser parser(source, result.diagnostics);
  auto [variant, config] = parser.parseVariantTop();
  if (variant && !variant->name.empty()) result.variant = std::move(variant);
  if (config && !config->name.empty()) result.config = std::move(config);
  finalizeDiagnostics(result.diagnostics);
  return result;
}

ParseResult parseFile(const SourceFile& source) {
  return source.kind == SourceFile::Kind::Component ? parseComponentFile(source)
                                                    : parseVariantFile(source);
}

}  // namespace archv
