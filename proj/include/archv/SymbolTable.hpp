#ifndef ARCHV_SYMBOL_TABLE_HPP
#define ARCHV_SYMBOL_TABLE_HPP

#include <map>
#include <string>
#include <vector>

#include "archv/Ast.hpp"

namespace archv {

/// A subcomponent instance as seen by name resolution: either declared with
/// a `component Type name;` statement or induced implicitly by an inner
/// component definition (one instance named after the definition).
struct InstanceSymbol {
  std::string name;
  const SubcomponentDecl* decl = nullptr;  // null for inner-definition instances
  std::size_t position = 0;                // index into decl->instances
  const ComponentDef* innerDef = nullptr;  // set for inner-definition instances
  SourceLocation loc;
  int orderKey = 0;
};

struct ComponentScope {
  const ComponentDef* def = nullptr;
  std::string path;  // definition path, e.g. "WindowSystem.WindowWatchDog"
  std::map<std::string, const PortDecl*> ports;
  std::map<std::string, InstanceSymbol> instances;
  std::map<std::string, const VariationPointDecl*> variationPoints;
  std::map<std::string, const ComponentDef*> inners;
  // Enclosing definitions with their paths, outermost first.
  std::vector<std::pair<const ComponentDef*, std::string>> lexicalChain;
  QualifiedName package;
};

/// Name/symbol index over an immutable ModelSet. Duplicate definitions
/// within a scope are reported during build; the first one wins.
class SymbolTable {
 public:
  static SymbolTable build(const ModelSet& models, std::vector<Diagnostic>& diags);

  const ModelSet& models() const { return *models_; }
  const ComponentScope* scope(const std::string& defPath) const;

  /// Variants registered for a variation point, keyed by
  /// `<definition path>.<vp name>`.
  const std::map<std::string, const VariantDef*>* variantsFor(const std::string& vpKey) const;
  const VariantDef* variant(const std::string& vpKey, const std::string& name) const;

  /// Resolves a component type reference from within `from`: the scope's own
  /// inner definitions first, then enclosing definitions, then top level.
  const ComponentDef* resolveTypeRef(const ComponentScope& from, const QualifiedName& type,
                                     std::string* defPathOut = nullptr) const;

  const std::map<std::string, ComponentScope>& scopes() const { return scopes_; }

 private:
  const ModelSet* models_ = nullptr;
  std::map<std::string, ComponentScope> scopes_;
  std::map<std::string, std::map<std::string, const VariantDef*>> variantsByVp_;
};

}  // namespace archv

#endif
