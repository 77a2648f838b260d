#ifndef ARCHV_RENDER_HPP
#define ARCHV_RENDER_HPP

#include <string>

#include "archv/Ast.hpp"

namespace archv {

/// Canonical text rendering. Feeding the output back through the parser
/// reproduces a structurally equal definition.
std::string render(const ComponentDef& def);
std::string render(const VariantDef& def);
std::string render(const VariantConfig& def);

/// Equality up to source locations.
bool structurallyEqual(const ComponentDef& a, const ComponentDef& b);
bool structurallyEqual(const VariantDef& a, const VariantDef& b);
bool structurallyEqual(const VariantConfig& a, const VariantConfig& b);

}  // namespace archv

#endif
