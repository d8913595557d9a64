#pragma once

// DOT export for orthogonality graphs and plain graphs.  Output is
// byte-stable: vertices are V1..Vm and edges are emitted in sorted order.
// Edge colours cycle a fixed palette by column.

#include <string>

#include "upb/graph.hpp"
#include "upb/ortho_graph.hpp"

namespace upb {

inline constexpr const char* kColumnPalette[] = {
    "blue", "gold", "green", "gray", "red", "purple", "orange", "brown"};
inline constexpr int kColumnPaletteSize = 8;

inline std::string dot_export(const OrthoGraph& g, const std::string& name = "uom") {
  std::string out = "graph " + name + " {\n";
  for (int v = 0; v < g.vertices; ++v)
    out += "  V" + std::to_string(v + 1) + ";\n";
  for (const OrthoEdge& e : g.edges) {
    out += "  V" + std::to_string(e.a + 1) + " -- V" + std::to_string(e.b + 1) +
           " [column=" + std::to_string(e.column + 1) + ", color=" +
           kColumnPalette[e.column % kColumnPaletteSize] + "];\n";
  }
  out += "}\n";
  return out;
}

inline std::string dot_export(const SimpleGraph& g, const std::string& name = "graph_") {
  std::string out = "graph " + name + " {\n";
  for (int v = 0; v < g.n; ++v) out += "  V" + std::to_string(v + 1) + ";\n";
  for (auto [a, b] : g.edges())
    out += "  V" + std::to_string(a + 1) + " -- V" + std::to_string(b + 1) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace upb
