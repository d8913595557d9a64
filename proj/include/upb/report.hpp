#pragma once

// Self-contained analysis bundle: everything is re-derived from the input
// matrix at generation time, and both renderings are byte-stable.

#include <optional>
#include <string>
#include <vector>

#include "upb/extension.hpp"
#include "upb/locc.hpp"
#include "upb/orbit.hpp"
#include "upb/ortho_graph.hpp"
#include "upb/stats.hpp"
#include "upb/uom.hpp"

namespace upb {

struct ReportBundle {
  Uom matrix;
  bool upb = false;
  std::optional<ExtensionWitness> witness;
  std::vector<ColumnStats> stats;
  PairBound bound;
  bool complete_single_pair = false;
  bool graphs_available = false;  // row count within the labelling limit
  std::vector<std::vector<int>> iso;
  std::vector<std::vector<int>> orbit_classes;
  std::vector<OrbitSignature> signatures;
  std::vector<std::vector<BipartitionReport>> bipartitions;  // k = 1 .. cols/2
};

inline ReportBundle make_report(const Uom& u) {
  u.require_validated("make_report");
  ReportBundle r;
  r.matrix = u;
  r.witness = find_extension(u);
  r.upb = !r.witness.has_value();
  for (int j = 0; j < u.cols(); ++j) r.stats.push_back(column_stats(u, j));
  r.bound = pair_bound(u);
  r.complete_single_pair = is_complete_single_pair(u);
  r.graphs_available = u.rows() <= kMaxLabelVertices;
  if (r.graphs_available) {
    r.iso = iso_classes(u);
    r.orbit_classes = orbits(u);
  } else {
    r.orbit_classes = orbits(u);
  }
  for (int j = 0; j < u.cols(); ++j) r.signatures.push_back(column_signature(u, j));
  for (int k = 1; k <= u.cols() / 2; ++k)
    r.bipartitions.push_back(audit_all_pairs(u, k));
  return r;
}

namespace detail {

inline std::string column_set_string(const std::vector<int>& cols) {
  std::string out = "{";
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(cols[i] + 1);
  }
  out.push_back('}');
  return out;
}

inline std::string partition_string(const std::vector<std::vector<int>>& classes) {
  std::string out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) out.push_back(' ');
    out += column_set_string(classes[i]);
  }
  return out;
}

inline std::string pairs_product_string(const ColumnStats& st) {
  std::string out;
  for (std::size_t i = 0; i < st.pairs.size(); ++i) {
    if (i) out.push_back('+');
    int hi = std::max(st.pairs[i].first, st.pairs[i].second);
    int lo = std::min(st.pairs[i].first, st.pairs[i].second);
    out += std::to_string(hi) + "x" + std::to_string(lo);
  }
  return out.empty() ? "0" : out;
}

inline std::string bipartition_line(const BipartitionReport& r) {
  std::string line = "S=" + column_set_string(r.s);
  line += " | side1=";
  line += r.reducible_on_s ? "reducible" : "irreducible";
  line += " | side2=";
  line += r.reducible_on_complement ? "reducible" : "irreducible";
  line += " | verdict=";
  line += verdict_name(r.verdict);
  return line;
}

}  // namespace detail

inline std::string render_text(const ReportBundle& r) {
  const Uom& u = r.matrix;
  std::string out;
  out += "matrix " + std::to_string(u.rows()) + "x" + std::to_string(u.cols()) + "\n";
  std::string body = u.serialize();
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t eol = body.find('\n', pos);
    out += "  " + body.substr(pos, eol - pos) + "\n";
    pos = eol + 1;
  }
  out += "validation: ok\n";
  out += std::string("unextendible: ") + (r.upb ? "yes" : "no") + "\n";
  if (r.witness) out += "extension witness: " + witness_text(u, *r.witness) + "\n";
  out += "column stats:\n";
  for (int j = 0; j < u.cols(); ++j) {
    const ColumnStats& st = r.stats[j];
    out += "  col " + std::to_string(j + 1) + ": sigma=" + std::to_string(st.sigma) +
           " p=" + std::to_string(st.p) + " (" + detail::pairs_product_string(st) + ")\n";
  }
  out += "sum p: " + std::to_string(r.bound.lhs) +
         "  bound m(m-1)/2: " + std::to_string(r.bound.rhs) + "  holds: " +
         (r.bound.holds ? "yes" : "no") + "\n";
  out += std::string("complete single-pair graph: ") +
         (r.complete_single_pair ? "yes" : "no") + "\n";
  if (r.graphs_available)
    out += "iso classes: " + detail::partition_string(r.iso) + "\n";
  else
    out += "iso classes: unavailable (more than 16 rows)\n";
  out += "orbits:\n";
  for (const auto& cls : r.orbit_classes)
    out += "  " + detail::column_set_string(cls) + " signature " +
           signature_string(r.signatures[cls[0]]) + "\n";
  for (std::size_t ki = 0; ki < r.bipartitions.size(); ++ki) {
    out += "bipartitions k=" + std::to_string(ki + 1) + ":\n";
    for (const BipartitionReport& b : r.bipartitions[ki])
      out += "  " + detail::bipartition_line(b) + "\n";
  }
  return out;
}

inline std::string render_records(const ReportBundle& r) {
  const Uom& u = r.matrix;
  std::string out;
  out += "matrix.rows=" + std::to_string(u.rows()) + "\n";
  out += "matrix.cols=" + std::to_string(u.cols()) + "\n";
  Uom::Grid g = u.grid();
  for (int i = 0; i < u.rows(); ++i) {
    out += "matrix.row." + std::to_string(i + 1) + "=";
    for (int j = 0; j < u.cols(); ++j) {
      if (j) out.push_back(' ');
      out += u.entry_text(u.at(i, j));
    }
    out.push_back('\n');
  }
  out += "validated=true\n";
  out += std::string("upb=") + (r.upb ? "true" : "false") + "\n";
  if (r.witness) out += "witness=" + witness_text(u, *r.witness) + "\n";
  for (int j = 0; j < u.cols(); ++j) {
    const ColumnStats& st = r.stats[j];
    std::string prefix = "col." + std::to_string(j + 1);
    out += prefix + ".sigma=" + std::to_string(st.sigma) + "\n";
    out += prefix + ".p=" + std::to_string(st.p) + "\n";
    out += prefix + ".pairs=";
    for (auto [a, b] : st.pairs) out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    out.push_back('\n');
  }
  out += "sum_p=" + std::to_string(r.bound.lhs) + "\n";
  out += "bound.rhs=" + std::to_string(r.bound.rhs) + "\n";
  out += std::string("bound.holds=") + (r.bound.holds ? "true" : "false") + "\n";
  out += std::string("complete_single_pair=") +
         (r.complete_single_pair ? "true" : "false") + "\n";
  if (r.graphs_available)
    out += "iso_classes=" + detail::partition_string(r.iso) + "\n";
  for (std::size_t c = 0; c < r.orbit_classes.size(); ++c) {
    out += "orbit." + std::to_string(c + 1) +
           ".columns=" + detail::column_set_string(r.orbit_classes[c]) + "\n";
    out += "orbit." + std::to_string(c + 1) +
           ".signature=" + signature_string(r.signatures[r.orbit_classes[c][0]]) + "\n";
  }
  for (std::size_t ki = 0; ki < r.bipartitions.size(); ++ki)
    for (const BipartitionReport& b : r.bipartitions[ki]) {
      out += "bipartition k=" + std::to_string(ki + 1) +
             " S=" + detail::column_set_string(b.s) + " side1=" +
             (b.reducible_on_s ? "reducible" : "irreducible") + " side2=" +
             (b.reducible_on_complement ? "reducible" : "irreducible") +
             " verdict=" + verdict_name(b.verdict) + "\n";
    }
  return out;
}

}  // namespace upb
