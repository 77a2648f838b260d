#ifndef ARCHV_AST_HPP
#define ARCHV_AST_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace archv {

struct SourceLocation {
  std::string file;
  int line = 0;
  int column = 0;

  bool valid() const { return line > 0; }
};

std::string toString(const SourceLocation& loc);

/// A simple or parametric name. Parametric names render as `prefix~name`;
/// both halves match [A-Za-z][A-Za-z0-9]*.
struct Identifier {
  std::string prefix;
  std::string name;
  SourceLocation loc;

  Identifier() = default;
  explicit Identifier(std::string n) : name(std::move(n)) {}
  Identifier(std::string p, std::string n) : prefix(std::move(p)), name(std::move(n)) {}

  bool parametric() const { return !prefix.empty(); }
  std::string text() const { return prefix.empty() ? name : prefix + "~" + name; }
  bool empty() const { return name.empty(); }
};

bool operator==(const Identifier& a, const Identifier& b);
bool operator!=(const Identifier& a, const Identifier& b);

struct QualifiedName {
  std::vector<Identifier> segments;

  QualifiedName() = default;
  explicit QualifiedName(std::vector<Identifier> segs) : segments(std::move(segs)) {}

  bool empty() const { return segments.empty(); }
  std::size_t size() const { return segments.size(); }
  std::string text() const;
  SourceLocation loc() const { return segments.empty() ? SourceLocation{} : segments.front().loc; }
};

bool operator==(const QualifiedName& a, const QualifiedName& b);
bool operator!=(const QualifiedName& a, const QualifiedName& b);

QualifiedName parseQualifiedNameText(const std::string& text);

enum class PortDirection { In, Out };

const char* toString(PortDirection dir);

struct PortDecl {
  PortDirection direction = PortDirection::In;
  Identifier type;
  Identifier name;       // equals type when implicitly named
  bool implicitName = false;
  int declIndex = 0;
  SourceLocation loc;
};

struct SubcomponentDecl {
  QualifiedName type;
  std::vector<Identifier> instances;  // one implicit instance when none written
  bool implicitNames = false;
  int declIndex = 0;
  SourceLocation loc;
};

/// One endpoint of a connector: `port` or `subcomponent.port`.
struct ConnectorEnd {
  std::optional<Identifier> component;
  Identifier port;

  std::string text() const;
  SourceLocation loc() const { return component ? component->loc : port.loc; }
};

bool operator==(const ConnectorEnd& a, const ConnectorEnd& b);

/// `connect src -> t1, t2, ...;` — k targets denote k point-to-point edges.
struct ConnectorDecl {
  ConnectorEnd source;
  std::vector<ConnectorEnd> targets;
  bool implicitOrigin = false;  // produced by autoconnect expansion
  int declIndex = 0;
  SourceLocation loc;
};

struct Cardinality {
  int min = 1;
  int max = 1;

  std::string text() const;
};

bool operator==(const Cardinality& a, const Cardinality& b);

struct VariationPointDecl {
  Identifier name;
  Cardinality cardinality;     // defaults to [1..1] when omitted
  bool explicitCardinality = false;
  int declIndex = 0;
  SourceLocation loc;
};

enum class AutoconnectMode { None, Port, Type };

const char* toString(AutoconnectMode mode);

struct ComponentDef {
  Identifier name;
  QualifiedName package;
  AutoconnectMode autoconnect = AutoconnectMode::None;
  std::vector<PortDecl> ports;
  std::vector<SubcomponentDecl> subcomponents;
  std::vector<ComponentDef> innerComponents;
  std::vector<ConnectorDecl> connectors;
  std::vector<VariationPointDecl> variationPoints;
  int declIndex = 0;  // body-order slot when this is an inner definition
  SourceLocation loc;

  std::string qualifiedName() const;
};

enum class ConstraintKind { Requires, Excludes };

const char* toString(ConstraintKind kind);

/// `requires VP.Variant` / `excludes VP.Variant`, relative to the component
/// that owns the constrained variation point.
struct ConstraintClause {
  ConstraintKind kind = ConstraintKind::Requires;
  QualifiedName target;
  SourceLocation loc;
};

struct VariantSelection {
  QualifiedName variationPoint;
  Identifier variant;
  std::vector<Identifier> actuals;
  int declIndex = 0;
  SourceLocation loc;
};

/// A variant body carries the same element kinds as a component except
/// variation points, which the meta model forbids inside variants. The
/// parser records any such misplaced declaration separately so the checker
/// can point at it; they are never part of the body.
struct VariantDef {
  Identifier name;
  QualifiedName package;
  std::vector<Identifier> formalParameters;
  QualifiedName realizes;
  std::vector<ConstraintClause> constraints;
  AutoconnectMode autoconnect = AutoconnectMode::None;
  std::vector<PortDecl> ports;
  std::vector<SubcomponentDecl> subcomponents;
  std::vector<ComponentDef> innerComponents;
  std::vector<ConnectorDecl> connectors;
  std::vector<VariantSelection> selections;
  std::vector<VariationPointDecl> misplacedVariationPoints;
  SourceLocation loc;

  bool parametrized() const { return !formalParameters.empty(); }
  /// Registry key: realizes path + variant name.
  std::string key() const { return realizes.text() + "." + name.text(); }
};

struct VariantConfig {
  Identifier name;
  QualifiedName package;
  bool abstract = false;
  QualifiedName target;
  std::optional<QualifiedName> superConfig;
  std::vector<VariantSelection> selections;
  SourceLocation loc;

  std::string qualifiedName() const;
};

enum class Severity { Error, Warning };

const char* toString(Severity sev);

struct Diagnostic {
  std::string code;
  Severity severity = Severity::Error;
  std::string message;
  SourceLocation loc;

  /// `<file>:<line>:<col>: <severity> <code>: <message>`
  std::string render() const;
};

Diagnostic makeError(std::string code, std::string message, SourceLocation loc);
Diagnostic makeWarning(std::string code, std::string message, SourceLocation loc);

/// Stable order: (file, line, column, code, message). Duplicates collapse.
void sortDiagnostics(std::vector<Diagnostic>& diags);
bool hasErrors(const std::vector<Diagnostic>& diags);

/// All top-level definitions, keyed by rendered qualified name.
/// Immutable once built; every query is read-only.
struct ModelSet {
  std::map<std::string, ComponentDef> components;
  std::map<std::string, VariantDef> variants;   // keyed by VariantDef::key()
  std::map<std::string, VariantConfig> configs;

  const ComponentDef* findComponent(const std::string& qualifiedName) const;
  const VariantConfig* findConfig(const std::string& qualifiedName) const;

  bool addComponent(ComponentDef def);
  bool addVariant(VariantDef def);
  bool addConfig(VariantConfig def);
};

}  // namespace archv

#endif
