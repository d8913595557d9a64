#pragma once

// Orthogonality graph of a matrix: rows are vertices and every
// (row pair, column) orthogonality incidence contributes one edge labelled
// by its column.  Column subgraphs are classified up to isomorphism.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "upb/graph.hpp"
#include "upb/stats.hpp"
#include "upb/uom.hpp"

namespace upb {

struct OrthoEdge {
  int a = 0;  // a < b
  int b = 0;
  int column = 0;

  friend bool operator==(const OrthoEdge&, const OrthoEdge&) = default;
  friend auto operator<=>(const OrthoEdge&, const OrthoEdge&) = default;
};

struct OrthoGraph {
  int vertices = 0;
  int columns = 0;
  std::vector<OrthoEdge> edges;  // sorted by (a, b, column)
};

inline OrthoGraph build_graph(const Uom& u) {
  u.require_validated("build_graph");
  OrthoGraph g;
  g.vertices = u.rows();
  g.columns = u.cols();
  for (int i = 0; i < u.rows(); ++i)
    for (int k = i + 1; k < u.rows(); ++k)
      for (int j : u.orthogonal_columns(i, k)) g.edges.push_back({i, k, j});
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

// True when every row pair has exactly one orthogonal column, i.e. the
// orthogonality graph is the complete graph with no multi-edges.
inline bool is_complete_single_pair(const Uom& u) {
  u.require_validated("is_complete_single_pair");
  for (int i = 0; i < u.rows(); ++i)
    for (int k = i + 1; k < u.rows(); ++k)
      if (u.orthogonal_columns(i, k).size() != 1) return false;
  return true;
}

inline SimpleGraph column_subgraph(const OrthoGraph& g, int j) {
  if (j < 0 || j >= g.columns) throw IndexError("column index out of range");
  SimpleGraph s(g.vertices);
  for (const OrthoEdge& e : g.edges)
    if (e.column == j) s.add_edge(e.a, e.b);
  return s;
}

// Columns grouped by the canonical label of their subgraphs.  Classes are
// ordered by smallest member, members ascending (0-based).
inline std::vector<std::vector<int>> iso_classes(const Uom& u) {
  u.require_validated("iso_classes");
  if (u.rows() > kMaxLabelVertices)
    throw TooLarge("iso_classes supports at most 16 rows");
  OrthoGraph g = build_graph(u);
  std::map<std::string, std::vector<int>> by_label;
  std::vector<std::string> label_of(static_cast<std::size_t>(u.cols()));
  for (int j = 0; j < u.cols(); ++j) {
    label_of[j] = canonical_label(column_subgraph(g, j));
    by_label[label_of[j]].push_back(j);
  }
  std::vector<std::vector<int>> classes;
  std::vector<bool> done(static_cast<std::size_t>(u.cols()), false);
  for (int j = 0; j < u.cols(); ++j) {
    if (done[j]) continue;
    classes.push_back(by_label[label_of[j]]);
    for (int c : classes.back()) done[c] = true;
  }
  return classes;
}

}  // namespace upb
