#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sna/analysis.hpp"
#include "sna/architecture.hpp"

namespace sna {

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

// DOT rendering of the architecture: components as boxes, assets as
// ellipses, connectors as edges, dotted custodian links from component to
// asset. External elements are dashed; when an analysis result is given,
// reported softspots are filled. Output is deterministic (sorted by id).
inline std::string export_graph(const Architecture& arch,
                                const AnalysisResult* result = nullptr) {
  std::string out;
  out += "digraph \"" +
         detail::dot_escape(arch.id.empty() ? "architecture" : arch.id) +
         "\" {\n";
  out += "  rankdir=LR;\n";
  out += "  node [fontname=\"Helvetica\"];\n";

  auto components = arch.components;
  std::sort(components.begin(), components.end(),
            [](const Component& a, const Component& b) { return a.id < b.id; });
  for (const auto& c : components) {
    std::string style;
    if (c.scope == Scope::external) style = "dashed";
    if (result != nullptr && result->softspots_reported.count(c.id) != 0) {
      style += style.empty() ? "filled" : ",filled";
    }
    out += "  \"" + c.id + "\" [shape=box, label=\"" +
           detail::dot_escape(c.name.empty() ? c.id : c.name) + "\"";
    if (!style.empty()) {
      out += ", style=\"" + style + "\"";
      if (style.find("filled") != std::string::npos) {
        out += ", fillcolor=\"salmon\"";
      }
    }
    out += "];\n";
  }

  auto assets = arch.assets;
  std::sort(assets.begin(), assets.end(),
            [](const Asset& a, const Asset& b) { return a.id < b.id; });
  for (const auto& a : assets) {
    std::string style;
    if (result != nullptr && result->softspots_reported.count(a.id) != 0) {
      style = "filled";
    }
    out += "  \"" + a.id + "\" [shape=ellipse, label=\"" +
           detail::dot_escape(a.name.empty() ? a.id : a.name) + "\"";
    if (!style.empty()) {
      out += ", style=\"" + style + "\", fillcolor=\"salmon\"";
    }
    out += "];\n";
  }

  auto connectors = arch.connectors;
  std::sort(connectors.begin(), connectors.end(),
            [](const Connector& a, const Connector& b) { return a.id < b.id; });
  for (const auto& k : connectors) {
    out += "  \"" + k.from + "\" -> \"" + k.to + "\"";
    switch (k.kind) {
      case ConnectorKind::call:
        break;
      case ConnectorKind::message:
        out += " [style=dashed]";
        break;
      case ConnectorKind::data_access:
        out += " [style=dotted]";
        break;
    }
    out += ";\n";
  }
  for (const auto& a : assets) {
    for (const auto& custodian : a.custodians) {
      out += "  \"" + custodian + "\" -> \"" + a.id +
             "\" [style=dotted, arrowhead=none];\n";
    }
  }

  out += "}\n";
  return out;
}

}  // namespace sna
