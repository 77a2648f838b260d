#ifndef ARCHV_RESOLVE_HPP
#define ARCHV_RESOLVE_HPP

#include <string>

#include "archv/Ast.hpp"
#include "archv/SymbolTable.hpp"

namespace archv {

/// Outcome of resolving a qualified path through the model: the first
/// segment names a top-level component; each further segment an inner
/// definition, a subcomponent instance (resolution continues through the
/// instance's type), and finally a variation point or variant.
struct Resolved {
  enum class Kind { NotFound, Component, Subcomponent, VariationPoint, Variant };

  Kind kind = Kind::NotFound;
  const ComponentDef* component = nullptr;  // owner def (or the component itself)
  std::string componentPath;                // definition path of `component`
  const InstanceSymbol* instance = nullptr;
  const VariationPointDecl* variationPoint = nullptr;
  std::string vpKey;
  const VariantDef* variant = nullptr;

  bool found() const { return kind != Kind::NotFound; }
};

/// Pure function of its arguments; identical inputs give identical results.
Resolved resolve(const SymbolTable& table, const QualifiedName& path);

/// Convenience overload matching the in-memory model alone; builds the
/// symbol index on the fly.
Resolved resolve(const ModelSet& models, const QualifiedName& path);

}  // namespace archv

#endif
