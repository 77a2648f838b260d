#include "archv/Render.hpp"

#include <algorithm>
#include <sstream>

namespace archv {

namespace {

struct Writer {
  std::ostringstream out;
  int depth = 0;

  void line(const std::string& text) {
    for (int i = 0; i < depth; ++i) out << "  ";
    out << text << "\n";
  }
};

std::string renderPort(const PortDecl& port) {
  std::string out = std::string(toString(port.direction)) + " " + port.type.text();
  if (!port.implicitName) out += " " + port.name.text();
  return out;
}

std::string renderSelection(const VariantSelection& sel) {
  std::string out = sel.variationPoint.text() + " realizedBy " + sel.variant.text();
  if (!sel.actuals.empty()) {
    out += "(";
    for (std::size_t i = 0; i < sel.actuals.size(); ++i) {
      if (i > 0) out += ", ";
      out += sel.actuals[i].text();
    }
    out += ")";
  }
  return out + ";";
}

// Emits body elements in declIndex order, interleaving the element kinds
// the way they were declared.
template <typename Def>
void renderBody(Writer& w, const Def& def) {
  struct Item {
    int index;
    std::string text;
    const ComponentDef* inner = nullptr;
  };
  std::vector<Item> items;
  for (const auto& port : def.ports)
    items.push_back({port.declIndex, "port " + renderPort(port) + ";"});
  for (const auto& sub : def.subcomponents) {
    std::string text = "component " + sub.type.text();
    if (!sub.implicitNames) {
      for (std::size_t i = 0; i < sub.instances.size(); ++i) {
        text += (i == 0 ? " " : ", ") + sub.instances[i].text();
      }
    }
    items.push_back({sub.declIndex, text + ";"});
  }
  for (const auto& inner : def.innerComponents)
    items.push_back({inner.declIndex, "", &inner});
  for (const auto& conn : def.connectors) {
    std::string text = "connect " + conn.source.text() + " -> ";
    for (std::size_t i = 0; i < conn.targets.size(); ++i) {
      if (i > 0) text += ", ";
      text += conn.targets[i].text();
    }
    items.push_back({conn.declIndex, text + ";"});
  }
  if constexpr (requires { def.variationPoints; }) {
    for (const auto& vp : def.variationPoints) {
      std::string text = "variationPoint: " + vp.name.text();
      if (vp.explicitCardinality) text += " " + vp.cardinality.text();
      items.push_back({vp.declIndex, text + ";"});
    }
  }
  if constexpr (requires { def.selections; }) {
    for (const auto& sel : def.selections)
      items.push_back({sel.declIndex, renderSelection(sel)});
    for (const auto& vp : def.misplacedVariationPoints) {
      std::string text = "variationPoint: " + vp.name.text();
      if (vp.explicitCardinality) text += " " + vp.cardinality.text();
      items.push_back({vp.declIndex, text + ";"});
    }
  }
  std::stable_sort(items.begin(), items.end(),
                   [](const Item& a, const Item& b) { return a.index < b.index; });

  if (def.autoconnect != AutoconnectMode::None) {
    w.line(std::string("autoconnect ") + toString(def.autoconnect) + ";");
  }
  for (const auto& item : items) {
    if (item.inner) {
      w.line("component " + item.inner->name.text() + " {");
      ++w.depth;
      renderBody(w, *item.inner);
      --w.depth;
      w.line("}");
    } else {
      w.line(item.text);
    }
  }
}

void renderPackage(Writer& w, const QualifiedName& package) {
  if (!package.empty()) w.line("package " + package.text() + ";");
}

}  // namespace

std::string render(const ComponentDef& def) {
  Writer w;
  renderPackage(w, def.package);
  w.line("component " + def.name.text() + " {");
  ++w.depth;
  renderBody(w, def);
  --w.depth;
  w.line("}");
  return w.out.str();
}

std::string render(const VariantDef& def) {
  Writer w;
  renderPackage(w, def.package);
  std::string head = "variant " + def.name.text();
  if (!def.formalParameters.empty()) {
    head += "(";
    for (std::size_t i = 0; i < def.formalParameters.size(); ++i) {
      if (i > 0) head += ", ";
      head += def.formalParameters[i].text();
    }
    head += ")";
  }
  head += " realizes " + def.realizes.text();
  for (const auto& clause : def.constraints) {
    head += std::string(" ") + toString(clause.kind) + " " + clause.target.text();
  }
  w.line(head + " {");
  ++w.depth;
  renderBody(w, def);
  --w.depth;
  w.line("}");
  return w.out.str();
}

std::string render(const VariantConfig& def) {
  Writer w;
  renderPackage(w, def.package);
  std::string head;
  if (def.abstract) head += "abstract ";
  head += "variantConfig " + def.name.text() + " for " + def.target.text();
  if (def.superConfig) head += " extends " + def.superConfig->text();
  w.line(head + " {");
  ++w.depth;
  for (const auto& sel : def.selections) w.line(renderSelection(sel));
  --w.depth;
  w.line("}");
  return w.out.str();
}

namespace {

bool equal(const Identifier& a, const Identifier& b) { return a == b; }

bool equal(const QualifiedName& a, const QualifiedName& b) { return a == b; }

template <typename T, typename Eq>
bool equalSeq(const std::vector<T>& a, const std::vector<T>& b, Eq eq) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!eq(a[i], b[i])) return false;
  return true;
}

bool equal(const PortDecl& a, const PortDecl& b) {
  return a.direction == b.direction && equal(a.type, b.type) && equal(a.name, b.name) &&
         a.implicitName == b.implicitName && a.declIndex == b.declIndex;
}

bool equal(const SubcomponentDecl& a, const SubcomponentDecl& b) {
  return equal(a.type, b.type) && a.implicitNames == b.implicitNames &&
         a.declIndex == b.declIndex && equalSeq(a.instances, b.instances, equal);
}

bool equal(const ConnectorEnd& a, const ConnectorEnd& b) { return a == b; }

bool equal(const ConnectorDecl& a, const ConnectorDecl& b) {
  return equal(a.source, b.source) && a.implicitOrigin == b.implicitOrigin &&
         a.declIndex == b.declIndex && equalSeq(a.targets, b.targets, equal);
}

bool equal(const VariationPointDecl& a, const VariationPointDecl& b) {
  return equal(a.name, b.name) && a.cardinality == b.cardinality &&
         a.explicitCardinality == b.explicitCardinality && a.declIndex == b.declIndex;
}

bool equal(const ConstraintClause& a, const ConstraintClause& b) {
  return a.kind == b.kind && equal(a.target, b.target);
}

bool equal(const VariantSelection& a, const VariantSelection& b) {
  return equal(a.variationPoint, b.variationPoint) && equal(a.variant, b.variant) &&
         a.declIndex == b.declIndex && equalSeq(a.actuals, b.actuals, equal);
}

}  // namespace

bool structurallyEqual(const ComponentDef& a, const ComponentDef& b) {
  return equal(a.name, b.name) && equal(a.package, b.package) &&
         a.autoconnect == b.autoconnect && a.declIndex == b.declIndex &&
         equalSeq(a.ports, b.ports, [](auto& x, auto& y) { return equal(x, y); }) &&
         equalSeq(a.subcomponents, b.subcomponents,
                  [](auto& x, auto& y) { return equal(x, y); }) &&
         equalSeq(a.innerComponents, b.innerComponents,
                  [](auto& x, auto& y) { return structurallyEqual(x, y); }) &&
         equalSeq(a.connectors, b.connectors, [](auto& x, auto& y) { return equal(x, y); }) &&
         equalSeq(a.variationPoints, b.variationPoints,
                  [](auto& x, auto& y) { return equal(x, y); });
}

bool structurallyEqual(const VariantDef& a, const VariantDef& b) {
  return equal(a.name, b.name) && equal(a.package, b.package) &&
         equal(a.realizes, b.realizes) && a.autoconnect == b.autoconnect &&
         equalSeq(a.formalParameters, b.formalParameters,
                  [](auto& x, auto& y) { return equal(x, y); }) &&
         equalSeq(a.constraints, b.constraints, [](auto& x, auto& y) { return equal(x, y); }) &&
         equalSeq(a.ports, b.ports, [](auto& x, auto& y) { return equal(x, y); }) &&
         equalSeq(a.subcomponents, b.subcomponents,
                  [](auto& x, auto& y) { return equal(x, y); }) &&
         equalSeq(a.innerComponents, b.innerComponents,
                  [](auto& x, auto& y) { return structurallyEqual(x, y); }) &&
         equalSeq(a.connectors, b.connectors, [](auto& x, auto& y) { return equal(x, y); }) &&
         equalSeq(a.selections, b.selections, [](auto& x, auto& y) { return equal(x, y); }) &&
         equalSeq(a.misplacedVariationPoints, b.misplacedVariationPoints,
                  [](auto& x, auto& y) { return equal(x, y); });
}

bool structurallyEqual(const VariantConfig& a, const VariantConfig& b) {
  if (a.superConfig.has_value() != b.superConfig.has_value()) return false;
  if (a.superConfig && !equal(*a.superConfig, *b.superConfig)) return false;
  return equal(a.name, b.name) && equal(a.package, b.package) && a.abstract == b.abstract &&
         equal(a.target, b.target) &&
         equalSeq(a.selections, b.selections, [](auto& x, auto& y) { return equal(x, y); });
}

}  // namespace archv
