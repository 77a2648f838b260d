#include "archv/Ast.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace archv {

std::string toString(const SourceLocation& loc) {
  std::ostringstream out;
  out << loc.file << ":" << loc.line << ":" << loc.column;
  return out.str();
}

bool operator==(const Identifier& a, const Identifier& b) {
  return a.prefix == b.prefix && a.name == b.name;
}

bool operator!=(const Identifier& a, const Identifier& b) { return !(a == b); }

std::string QualifiedName::text() const {
  std::string out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i > 0) out += '.';
    out += segments[i].text();
  }
  return out;
}

bool operator==(const QualifiedName& a, const QualifiedName& b) {
  return a.segments == b.segments;
}

bool operator!=(const QualifiedName& a, const QualifiedName& b) { return !(a == b); }

QualifiedName parseQualifiedNameText(const std::string& text) {
  QualifiedName qn;
  std::string segment;
  std::istringstream in(text);
  while (std::getline(in, segment, '.')) {
    auto tilde = segment.find('~');
    if (tilde == std::string::npos) {
      qn.segments.emplace_back(segment);
    } else {
      qn.segments.emplace_back(segment.substr(0, tilde), segment.substr(tilde + 1));
    }
  }
  return qn;
}

const char* toString(PortDirection dir) {
  return dir == PortDirection::In ? "in" : "out";
}

std::string ConnectorEnd::text() const {
  return component ? component->text() + "." + port.text() : port.text();
}

bool operator==(const ConnectorEnd& a, const ConnectorEnd& b) {
  if (a.component.has_value() != b.component.has_value()) return false;
  if (a.component && *a.component != *b.component) return false;
  return a.port == b.port;
}

std::string Cardinality::text() const {
  return "[" + std::to_string(min) + ".." + std::to_string(max) + "]";
}

bool operator==(const Cardinality& a, const Cardinality& b) {
  return a.min == b.min && a.max == b.max;
}

const char* toString(AutoconnectMode mode) {
  switch (mode) {
    case AutoconnectMode::Port: return "port";
    case AutoconnectMode::Type: return "type";
    default: return "none";
  }
}

std::string ComponentDef::qualifiedName() const {
  return package.empty() ? name.text() : package.text() + "." + name.text();
}

const char* toString(ConstraintKind kind) {
  return kind == ConstraintKind::Requires ? "requires" : "excludes";
}

std::string VariantConfig::qualifiedName() const {
  return package.empty() ? name.text() : package.text() + "." + name.text();
}

const char* toString(Severity sev) {
  return sev == Severity::Error ? "error" : "warning";
}

std::string Diagnostic::render() const {
  std::ostringstream out;
  out << loc.file << ":" << loc.line << ":" << loc.column << ": "
      << toString(severity) << " " << code << ": " << message;
  return out.str();
}

Diagnostic makeError(std::string code, std::string message, SourceLocation loc) {
  return Diagnostic{std::move(code), Severity::Error, std::move(message), std::move(loc)};
}

Diagnostic makeWarning(std::string code, std::string message, SourceLocation loc) {
  return Diagnostic{std::move(code), Severity::Warning, std::move(message), std::move(loc)};
}

void sortDiagnostics(std::vector<Diagnostic>& diags) {
  auto key = [](const Diagnostic& d) {
    return std::tie(d.loc.file, d.loc.line, d.loc.column, d.code, d.message);
  };
  std::stable_sort(diags.begin(), diags.end(),
                   [&](const Diagnostic& a, const Diagnostic& b) { return key(a) < key(b); });
  diags.erase(std::unique(diags.begin(), diags.end(),
                          [&](const Diagnostic& a, const Diagnostic& b) {
                            return key(a) == key(b) && a.severity == b.severity;
                          }),
              diags.end());
}

bool hasErrors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

const ComponentDef* ModelSet::findComponent(const std::string& qualifiedName) const {
  auto it = components.find(qualifiedName);
  return it == components.end() ? nullptr : &it->second;
}

const VariantConfig* ModelSet::findConfig(const std::string& qualifiedName) const {
  auto it = configs.find(qualifiedName);
  return it == configs.end() ? nullptr : &it->second;
}

bool ModelSet::addComponent(ComponentDef def) {
  auto key = def.qualifiedName();
  return components.emplace(std::move(key), std::move(def)).second;
}

bool ModelSet::addVariant(VariantDef def) {
  auto key = def.key();
  return variants.emplace(std::move(key), std::move(def)).second;
}

bool ModelSet::addConfig(VariantConfig def) {
  auto key = def.qualifiedName();
  return configs.emplace(std::move(key), std::move(def)).second;
}

}  // namespace archv
