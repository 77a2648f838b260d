#include "archv/SymbolTable.hpp"

#include "archv/Resolve.hpp"

namespace archv {

namespace {

void buildScope(const ComponentDef& def, const std::string& path,
                std::vector<const ComponentDef*> chain, const QualifiedName& package,
                std::map<std::string, ComponentScope>& scopes,
                std::vector<Diagnostic>& diags) {
  ComponentScope scope;
  scope.def = &def;
  scope.path = path;
  scope.lexicalChain = chain;
  scope.package = package;

  for (const auto& port : def.ports) {
    if (!scope.ports.emplace(port.name.text(), &port).second) {
      diags.push_back(makeError("MA01", "duplicate port '" + port.name.text() + "' in component '" +
                                            def.name.text() + "'",
                                port.loc));
    }
  }
  for (const auto& sub : def.subcomponents) {
    for (std::size_t i = 0; i < sub.instances.size(); ++i) {
      InstanceSymbol sym;
      sym.name = sub.instances[i].text();
      sym.decl = &sub;
      sym.position = i;
      sym.loc = sub.instances[i].loc.valid() ? sub.instances[i].loc : sub.loc;
      sym.orderKey = sub.declIndex * 16 + static_cast<int>(i);
      if (!scope.instances.emplace(sym.name, sym).second) {
        diags.push_back(makeError(
            "MA01", "duplicate subcomponent '" + sym.name + "' in component '" +
                        def.name.text() + "'",
            sym.loc));
      }
    }
  }
  for (const auto& inner : def.innerComponents) {
    if (!scope.inners.emplace(inner.name.text(), &inner).second) {
      diags.push_back(makeError("MA01", "duplicate inner component '" + inner.name.text() +
                                            "' in component '" + def.name.text() + "'",
                                inner.loc));
      continue;
    }
    InstanceSymbol sym;
    sym.name = inner.name.text();
    sym.innerDef = &inner;
    sym.loc = inner.loc;
    sym.orderKey = inner.declIndex * 16;
    if (!scope.instances.emplace(sym.name, sym).second) {
      diags.push_back(makeError("MA01", "inner component '" + sym.name +
                                            "' clashes with a subcomponent of the same name",
                                inner.loc));
    }
  }
  for (const auto& vp : def.variationPoints) {
    if (!scope.variationPoints.emplace(vp.name.text(), &vp).second) {
      diags.push_back(makeError("MA01", "duplicate variation point '" + vp.name.text() +
                                            "' in component '" + def.name.text() + "'",
                                vp.loc));
    }
  }

  auto childChain = chain;
  childChain.push_back(&def);
  for (const auto& inner : def.innerComponents) {
    buildScope(inner, path + "." + inner.name.text(), childChain, package, scopes, diags);
  }
  scopes.emplace(path, std::move(scope));
}

}  // namespace

SymbolTable SymbolTable::build(const ModelSet& models, std::vector<Diagnostic>& diags) {
  SymbolTable table;
  table.models_ = &models;
  for (const auto& [key, def] : models.components) {
    buildScope(def, key, {}, def.package, table.scopes_, diags);
  }
  // Variants register against their resolved variation point. Unresolvable
  // realizes-paths are left unregistered; the checker reports them as CC4.
  for (const auto& [key, variant] : models.variants) {
    Resolved target = resolve(table, variant.realizes);
    if (target.kind != Resolved::Kind::VariationPoint) continue;
    auto& byName = table.variantsByVp_[target.vpKey];
    if (!byName.emplace(variant.name.text(), &variant).second) {
      diags.push_back(makeError("MA01", "duplicate variant '" + variant.name.text() +
                                            "' for variation point '" + target.vpKey + "'",
                                variant.loc));
    }
  }
  return table;
}

const ComponentScope* SymbolTable::scope(const std::string& defPath) const {
  auto it = scopes_.find(defPath);
  return it == scopes_.end() ? nullptr : &it->second;
}

const std::map<std::string, const VariantDef*>* SymbolTable::variantsFor(
    const std::string& vpKey) const {
  auto it = variantsByVp_.find(vpKey);
  return it == variantsByVp_.end() ? nullptr : &it->second;
}

const VariantDef* SymbolTable::variant(const std::string& vpKey,
                                       const std::string& name) const {
  const auto* byName = variantsFor(vpKey);
  if (!byName) return nullptr;
  auto it = byName->find(name);
  return it == byName->end() ? nullptr : it->second;
}

const ComponentDef* SymbolTable::resolveTypeRef(const ComponentScope& from,
                                                const QualifiedName& type,
                                                std::string* defPathOut) const {
  // Inner definitions of the referencing component and its lexical ancestors
  // shadow top-level components.
  auto tryInners = [&](const ComponentDef* host, const std::string& hostPath)
      -> const ComponentDef* {
    const ComponentDef* cur = host;
    std::string path = hostPath;
    for (const auto& seg : type.segments) {
      const ComponentDef* next = nullptr;
      for (const auto& inner : cur->innerComponents) {
        if (inner.name.text() == seg.text()) {
          next = &inner;
          break;
        }
      }
      if (!next) return nullptr;
      cur = next;
      path += "." + seg.text();
    }
    if (defPathOut) *defPathOut = path;
    return cur;
  };

  if (const ComponentDef* hit = tryInners(from.def, from.path)) return hit;
  for (auto it = from.lexicalChain.rbegin(); it != from.lexicalChain.rend(); ++it) {
    std::string hostPath = from.path;
    // Recover the ancestor's path by stripping trailing segments.
    std::size_t cut = hostPath.rfind('.');
    std::vector<std::string> prefixes;
    while (cut != std::string::npos) {
      prefixes.push_back(hostPath.substr(0, cut));
      cut = cut == 0 ? std::string::npos : hostPath.rfind('.', cut - 1);
    }
    std::size_t depth = static_cast<std::size_t>(from.lexicalChain.rend() - it - 1);
    if (depth < prefixes.size()) {
      if (const ComponentDef* hit = tryInners(*it, prefixes[depth])) return hit;
    }
  }

  const std::string text = type.text();
  if (!from.package.empty()) {
    auto qualified = from.package.text() + "." + text;
    if (const ComponentDef* hit = models_->findComponent(qualified)) {
      if (defPathOut) *defPathOut = qualified;
      return hit;
    }
  }
  if (const ComponentDef* hit = models_->findComponent(text)) {
    if (defPathOut) *defPathOut = text;
    return hit;
  }
  return nullptr;
}

}  // namespace archv
