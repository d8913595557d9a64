#pragma once

// Bipartition local-reducibility criterion.
//
// Fix a subset S of the qubit systems.  A first LOCC round that keeps the
// states orthogonal can peel the set into non-empty parts P, Q only when
// every cross pair is orthogonal inside S.  Pairs NOT orthogonal inside S
// must therefore stay on the same side, so valid splits are exactly the
// disconnections of the non-orthogonality graph over S.  When neither S nor
// its complement admits a split, the set is locally indistinguishable across
// that bipartition.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "upb/graph.hpp"
#include "upb/uom.hpp"

namespace upb {

namespace detail {

inline std::uint32_t column_set_mask(const Uom& u, const std::vector<int>& s) {
  std::uint32_t mask = 0;
  for (int j : s) {
    if (j < 0 || j >= u.cols()) throw IndexError("column subset index out of range");
    mask |= std::uint32_t{1} << j;
  }
  return mask;
}

}  // namespace detail

// Edge (i, k) present iff no column of s makes rows i and k orthogonal.
inline SimpleGraph nonortho_graph(const Uom& u, const std::vector<int>& s) {
  u.require_validated("nonortho_graph");
  std::uint32_t mask = detail::column_set_mask(u, s);
  SimpleGraph g(u.rows());
  for (int i = 0; i < u.rows(); ++i)
    for (int k = i + 1; k < u.rows(); ++k) {
      bool separated = false;
      for (int j = 0; j < u.cols() && !separated; ++j)
        separated = ((mask >> j) & 1) && orthogonal(u.at(i, j), u.at(k, j));
      if (!separated) g.add_edge(i, k);
    }
  return g;
}

struct RowSplit {
  std::vector<int> p;  // rows, ascending
  std::vector<int> q;

  friend bool operator==(const RowSplit&, const RowSplit&) = default;
};

// Some(P, Q) iff the non-orthogonality graph over s is disconnected; P is the
// component of row 0, Q the rest, so every cross pair is orthogonal inside s.
inline std::optional<RowSplit> reducible_on(const Uom& u, const std::vector<int>& s) {
  u.require_validated("reducible_on");
  if (u.rows() < 2) return std::nullopt;
  std::vector<int> comp = components(nonortho_graph(u, s));
  RowSplit split;
  for (int i = 0; i < u.rows(); ++i)
    (comp[i] == 0 ? split.p : split.q).push_back(i);
  if (split.q.empty()) return std::nullopt;
  return split;
}

enum class Verdict { DistinguishableHint, Indistinguishable };

inline const char* verdict_name(Verdict v) {
  return v == Verdict::Indistinguishable ? "indistinguishable" : "distinguishable-hint";
}

struct BipartitionReport {
  std::vector<int> s;  // 0-based columns, ascending
  std::optional<RowSplit> reducible_on_s;
  std::optional<RowSplit> reducible_on_complement;
  Verdict verdict = Verdict::DistinguishableHint;
};

inline BipartitionReport bipartition_report(const Uom& u, const std::vector<int>& s) {
  u.require_validated("bipartition_report");
  BipartitionReport r;
  r.s = s;
  std::sort(r.s.begin(), r.s.end());
  r.s.erase(std::unique(r.s.begin(), r.s.end()), r.s.end());
  std::uint32_t mask = detail::column_set_mask(u, r.s);
  std::vector<int> complement;
  for (int j = 0; j < u.cols(); ++j)
    if (!((mask >> j) & 1)) complement.push_back(j);
  r.reducible_on_s = reducible_on(u, r.s);
  r.reducible_on_complement = reducible_on(u, complement);
  r.verdict = (!r.reducible_on_s && !r.reducible_on_complement)
                  ? Verdict::Indistinguishable
                  : Verdict::DistinguishableHint;
  return r;
}

// One report per k-subset of columns, subsets in lexicographic order.
inline std::vector<BipartitionReport> audit_all_pairs(const Uom& u, int k) {
  u.require_validated("audit_all_pairs");
  if (k < 1 || k >= u.cols()) throw DomainError("side size must satisfy 1 <= k < columns");
  std::vector<BipartitionReport> out;
  std::vector<int> subset(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int next, int depth) -> void {
    if (depth == k) {
      out.push_back(bipartition_report(u, subset));
      return;
    }
    for (int j = next; j < u.cols(); ++j) {
      subset[depth] = j;
      self(self, j + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

struct AuditSummary {
  int total = 0;
  int indistinguishable = 0;
  int distinguishable_hint = 0;
};

inline AuditSummary summarize(const std::vector<BipartitionReport>& reports) {
  AuditSummary s;
  s.total = static_cast<int>(reports.size());
  for (const auto& r : reports)
    (r.verdict == Verdict::Indistinguishable ? s.indistinguishable
                                             : s.distinguishable_hint)++;
  return s;
}

}  // namespace upb
