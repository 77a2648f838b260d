#include "archv/ModelLoader.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

namespace archv {

namespace fs = std::filesystem;

std::vector<std::string> discoverModelFiles(const std::vector<std::string>& paths,
                                            std::string* missing) {
  std::vector<std::string> files;
  for (const auto& path : paths) {
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
      for (auto it = fs::recursive_directory_iterator(path, ec);
           it != fs::recursive_directory_iterator(); ++it) {
        if (!it->is_regular_file()) continue;
        auto p = it->path().string();
        if (kindForPath(p)) files.push_back(p);
      }
    } else if (fs::is_regular_file(path, ec)) {
      files.push_back(path);
    } else if (missing) {
      *missing = path;
    }
  }
  std::sort(files.begin(), files.end());
  files.erase(std::unique(files.begin(), files.end()), files.end());
  return files;
}

LoadResult loadFromSources(std::vector<SourceFile> sources) {
  LoadResult result;
  for (const auto& src : sources) result.files.push_back(src.path);

  std::vector<ParseResult> parses(sources.size());
  if (sources.size() > 1) {
    std::vector<std::future<ParseResult>> futures;
    futures.reserve(sources.size());
    for (const auto& src : sources) {
      futures.push_back(
          std::async(std::launch::async, [&src] { return parseFile(src); }));
    }
    for (std::size_t i = 0; i < futures.size(); ++i) parses[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < sources.size(); ++i) parses[i] = parseFile(sources[i]);
  }

  for (std::size_t i = 0; i < parses.size(); ++i) {
    auto& parse = parses[i];
    result.diagnostics.insert(result.diagnostics.end(), parse.diagnostics.begin(),
                              parse.diagnostics.end());
    if (hasErrors(parse.diagnostics)) continue;

    auto duplicate = [&](const std::string& what, const std::string& name,
                         SourceLocation loc) {
      result.diagnostics.push_back(
          makeError("MA01", "duplicate " + what + " '" + name + "'", std::move(loc)));
    };
    if (parse.component) {
      auto name = parse.component->qualifiedName();
      auto loc = parse.component->loc;
      if (!result.models.addComponent(std::move(*parse.component)))
        duplicate("component", name, loc);
    }
    if (parse.variant) {
      auto name = parse.variant->name.text();
      auto realizes = parse.variant->realizes.text();
      auto loc = parse.variant->loc;
      if (!result.models.addVariant(std::move(*parse.variant)))
        duplicate("variant", name + "' for '" + realizes, loc);
    }
    if (parse.config) {
      auto name = parse.config->qualifiedName();
      auto loc = parse.config->loc;
      if (!result.models.addConfig(std::move(*parse.config)))
        duplicate("configuration", name, loc);
    }
  }
  sortDiagnostics(result.diagnostics);
  return result;
}

LoadResult loadModelSet(const std::vector<std::string>& paths, std::string* missing) {
  auto files = discoverModelFiles(paths, missing);
  std::vector<SourceFile> sources;
  for (const auto& file : files) {
    SourceFile src;
    src.path = file;
    src.kind = *kindForPath(file);
    std::ifstream in(file, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    src.content = buf.str();
    sources.push_back(std::move(src));
  }
  return loadFromSources(std::move(sources));
}

}  // namespace archv
