#ifndef ARCHV_MODEL_LOADER_HPP
#define ARCHV_MODEL_LOADER_HPP

#include <string>
#include <vector>

#include "archv/Ast.hpp"
#include "archv/Parser.hpp"

namespace archv {

struct LoadResult {
  ModelSet models;
  std::vector<Diagnostic> diagnostics;
  std::vector<std::string> files;  // discovered paths, sorted
};

/// Recursively discovers `.arc`/`.archv` files under each path (files are
/// taken as-is) and returns them in sorted order.
std::vector<std::string> discoverModelFiles(const std::vector<std::string>& paths,
                                            std::string* missing = nullptr);

/// Parses every source and builds the model set. Files parse independently
/// (concurrently for larger sets); definitions from files with syntax errors
/// are not added. Duplicate top-level names are reported as MA01 and the
/// first definition wins.
LoadResult loadFromSources(std::vector<SourceFile> sources);

LoadResult loadModelSet(const std::vector<std::string>& paths,
                        std::string* missing = nullptr);

}  // namespace archv

#endif
