#ifndef ARCHV_PARSER_HPP
#define ARCHV_PARSER_HPP

#include <optional>
#include <string>
#include <vector>

#include "archv/Ast.hpp"

namespace archv {

struct SourceFile {
  enum class Kind { Component, VariantOrConfig };

  std::string path;
  Kind kind = Kind::Component;
  std::string content;
};

/// Derives the file kind from its extension: `.arc` holds a component,
/// `.archv` a variant definition or a configuration.
std::optional<SourceFile::Kind> kindForPath(const std::string& path);

struct ParseResult {
  std::optional<ComponentDef> component;
  std::optional<VariantDef> variant;
  std::optional<VariantConfig> config;
  std::vector<Diagnostic> diagnostics;

  bool hasValue() const { return component || variant || config; }
};

/// Parses one `.arc` file. Total: every input yields a result; on
/// recoverable errors the partial definition is still returned together
/// with SYN diagnostics in ascending source order.
ParseResult parseComponentFile(const SourceFile& source);

/// Parses one `.archv` file into either a variant definition or a
/// configuration. A `variationPoint` statement inside a variant body is
/// parsed and recorded, not rejected; the well-formedness checker flags it.
ParseResult parseVariantFile(const SourceFile& source);

ParseResult parseFile(const SourceFile& source);

}  // namespace archv

#endif
