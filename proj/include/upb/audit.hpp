#pragma once

// Structural audit of 11x7 matrices.
//
// Certain substructures force an extension row to exist, so they cannot
// occur in an 11x7 unextendible matrix:
//   (i)   a variable of multiplicity five or more;
//   (iii) two columns holding identical-entry groups of 3+3 or 4+2 on six
//         distinct rows;
//   (v)   a variable y whose rows all also carry some x in another column,
//         together with a row holding both x' and y';
//   (vi)  three columns with identical-entry groups 3, 2, 2 on seven
//         distinct rows;
//   (vii) four columns with identical-entry groups 2, 2, 2, 2 on eight
//         distinct rows.
// Each such pattern yields an explicit extension row: the primed partners of
// the grouped variables kill their rows, and every leftover row is killed
// through a dedicated leftover column.
//
// Two further checks are reported informationally: (ii) each column should
// have between two and five independent families, and (iv) for disjoint
// groups rows(x), rows(y) in two columns, every grouped row must be
// orthogonal to some outside row within those two columns.

#include <bit>
#include <string>
#include <vector>

#include "upb/stats.hpp"
#include "upb/uom.hpp"

namespace upb {

struct AuditFinding {
  enum class Item {
    MultiplicityCap,         // (i)
    SigmaRange,              // (ii), informational
    TwoColumnBlock,          // (iii)
    PairObligation,          // (iv), informational
    CoveredPartnerBlock,     // (v)
    ThreeColumnBlock,        // (vi)
    FourColumnBlock          // (vii)
  };

  Item item;
  bool informational = false;
  std::vector<int> columns;  // 0-based columns involved
  std::string detail;
};

inline const char* audit_item_numeral(AuditFinding::Item item) {
  switch (item) {
    case AuditFinding::Item::MultiplicityCap: return "i";
    case AuditFinding::Item::SigmaRange: return "ii";
    case AuditFinding::Item::TwoColumnBlock: return "iii";
    case AuditFinding::Item::PairObligation: return "iv";
    case AuditFinding::Item::CoveredPartnerBlock: return "v";
    case AuditFinding::Item::ThreeColumnBlock: return "vi";
    case AuditFinding::Item::FourColumnBlock: return "vii";
  }
  return "?";
}

namespace detail {

struct ColumnVar {
  VectorVar var;
  RowMask rows = 0;
  int count = 0;
};

inline std::vector<std::vector<ColumnVar>> occurring_vars(const Uom& u) {
  std::vector<std::vector<ColumnVar>> out(static_cast<std::size_t>(u.cols()));
  for (int j = 0; j < u.cols(); ++j)
    for (int id : u.column_families(j))
      for (bool primed : {false, true}) {
        VectorVar v{j, id, primed};
        RowMask rows = u.rows_with(v);
        if (rows) out[j].push_back({v, rows, std::popcount(rows)});
      }
  return out;
}

// Can subsets of the given sizes be chosen pairwise disjoint from the masks?
inline bool disjoint_selection(const std::vector<RowMask>& masks,
                               const std::vector<int>& sizes, std::size_t idx = 0,
                               RowMask used = 0) {
  if (idx == masks.size()) return true;
  RowMask avail = masks[idx] & ~used;
  int need = sizes[idx];
  if (std::popcount(avail) < need) return false;
  // choose `need` bits out of avail
  std::vector<int> bits;
  for (RowMask m = avail; m; m &= m - 1) bits.push_back(std::countr_zero(m));
  std::vector<int> pick(static_cast<std::size_t>(need));
  auto rec = [&](auto&& self, int start, int depth) -> bool {
    if (depth == need) {
      RowMask chosen = 0;
      for (int d = 0; d < need; ++d) chosen |= RowMask{1} << bits[pick[d]];
      return disjoint_selection(masks, sizes, idx + 1, used | chosen);
    }
    for (int b = start; b <= static_cast<int>(bits.size()) - (need - depth); ++b) {
      pick[depth] = b;
      if (self(self, b + 1, depth + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

}  // namespace detail

// Scans an 11x7 matrix for the forbidden substructures; the gathered
// findings are empty for a genuine 11x7 unextendible matrix.  Works on
// parse-only inputs as well: the scan is purely structural.
inline std::vector<AuditFinding> structural_audit(const Uom& u) {
  if (u.rows() != 11 || u.cols() != 7)
    throw ShapeMismatch("the structural audit is stated for 11x7 matrices");

  std::vector<AuditFinding> findings;
  auto vars = detail::occurring_vars(u);
  const int n = u.cols();

  // (i) multiplicity cap
  for (int j = 0; j < n; ++j)
    for (const auto& cv : vars[j])
      if (cv.count >= 5)
        findings.push_back({AuditFinding::Item::MultiplicityCap,
                            false,
                            {j},
                            "entry " + u.entry_text(cv.var) + " in column " +
                                std::to_string(j + 1) + " has multiplicity " +
                                std::to_string(cv.count)});

  // (ii) sigma range, informational
  for (int j = 0; j < n; ++j) {
    int sigma = column_stats(u, j).sigma;
    if (sigma < 2 || sigma > 5)
      findings.push_back({AuditFinding::Item::SigmaRange,
                          true,
                          {j},
                          "column " + std::to_string(j + 1) + " has " +
                              std::to_string(sigma) + " independent families"});
  }

  // (iii) 6x2 blocks: disjoint groups of sizes 3+3 or 4+2
  for (int j1 = 0; j1 < n; ++j1)
    for (int j2 = j1 + 1; j2 < n; ++j2)
      for (const auto& x : vars[j1])
        for (const auto& y : vars[j2])
          for (auto [s, t] : {std::pair{3, 3}, std::pair{4, 2}, std::pair{2, 4}}) {
            if (x.count < s || y.count < t) continue;
            if (!detail::disjoint_selection({x.rows, y.rows}, {s, t})) continue;
            findings.push_back({AuditFinding::Item::TwoColumnBlock,
                                false,
                                {j1, j2},
                                u.entry_text(x.var) + " x" + std::to_string(s) +
                                    " with " + u.entry_text(y.var) + " x" +
                                    std::to_string(t) + " on disjoint rows"});
            break;  // one finding per variable pair
          }

  // (v) rows(y) inside rows(x) plus a row carrying x' and y'
  for (int j1 = 0; j1 < n; ++j1)
    for (const auto& x : vars[j1]) {
      RowMask partner_rows = u.rows_with(partner(x.var));
      if (!partner_rows) continue;
      for (int j2 = 0; j2 < n; ++j2) {
        if (j2 == j1) continue;
        for (int id : u.column_families(j2))
          for (bool primed : {false, true}) {
            VectorVar y{j2, id, primed};
            RowMask y_rows = u.rows_with(y);
            if ((y_rows & ~x.rows) != 0) continue;  // y must live inside rows(x)
            RowMask anchors = partner_rows & u.rows_with(partner(y));
            if (!anchors) continue;
            findings.push_back(
                {AuditFinding::Item::CoveredPartnerBlock,
                 false,
                 {j1, j2},
                 "rows of " + u.entry_text(y) + " lie inside rows of " +
                     u.entry_text(x.var) + " and a row holds both partners"});
          }
      }
    }

  // (vi) 7x3 blocks: disjoint groups of sizes 3, 2, 2
  for (int j1 = 0; j1 < n; ++j1)
    for (int j2 = 0; j2 < n; ++j2)
      for (int j3 = j2 + 1; j3 < n; ++j3) {
        if (j1 == j2 || j1 == j3) continue;
        for (const auto& x : vars[j1]) {
          if (x.count < 3) continue;
          for (const auto& y : vars[j2]) {
            if (y.count < 2) continue;
            for (const auto& z : vars[j3]) {
              if (z.count < 2) continue;
              if (!detail::disjoint_selection({x.rows, y.rows, z.rows}, {3, 2, 2}))
                continue;
              findings.push_back({AuditFinding::Item::ThreeColumnBlock,
                                  false,
                                  {j1, j2, j3},
                                  "groups 3/2/2 of " + u.entry_text(x.var) + ", " +
                                      u.entry_text(y.var) + ", " + u.entry_text(z.var) +
                                      " on disjoint rows"});
            }
          }
        }
      }

  // (vii) 8x4 blocks: disjoint groups of sizes 2, 2, 2, 2
  for (int j1 = 0; j1 < n; ++j1)
    for (int j2 = j1 + 1; j2 < n; ++j2)
      for (int j3 = j2 + 1; j3 < n; ++j3)
        for (int j4 = j3 + 1; j4 < n; ++j4)
          for (const auto& x1 : vars[j1]) {
            if (x1.count < 2) continue;
            for (const auto& x2 : vars[j2]) {
              if (x2.count < 2) continue;
              for (const auto& x3 : vars[j3]) {
                if (x3.count < 2) continue;
                for (const auto& x4 : vars[j4]) {
                  if (x4.count < 2) continue;
                  if (!detail::disjoint_selection(
                          {x1.rows, x2.rows, x3.rows, x4.rows}, {2, 2, 2, 2}))
                    continue;
                  findings.push_back(
                      {AuditFinding::Item::FourColumnBlock,
                       false,
                       {j1, j2, j3, j4},
                       "groups 2/2/2/2 of " + u.entry_text(x1.var) + ", " +
                           u.entry_text(x2.var) + ", " + u.entry_text(x3.var) +
                           ", " + u.entry_text(x4.var) + " on disjoint rows"});
                }
              }
            }
          }

  // (iv) orthogonality obligation for disjoint two-column groups,
  // informational
  for (int j1 = 0; j1 < n; ++j1)
    for (int j2 = 0; j2 < n; ++j2) {
      if (j1 == j2) continue;
      for (const auto& x : vars[j1])
        for (const auto& y : vars[j2]) {
          if (x.rows & y.rows) continue;
          RowMask block = x.rows | y.rows;
          RowMask outside = u.all_rows_mask() & ~block;
          if (!outside) continue;
          for (RowMask km = block; km; km &= km - 1) {
            int k = std::countr_zero(km);
            bool satisfied = false;
            for (RowMask lm = outside; lm && !satisfied; lm &= lm - 1) {
              int l = std::countr_zero(lm);
              satisfied = orthogonal(u.at(k, j1), u.at(l, j1)) ||
                          orthogonal(u.at(k, j2), u.at(l, j2));
            }
            if (!satisfied) {
              findings.push_back(
                  {AuditFinding::Item::PairObligation,
                   true,
                   {j1, j2},
                   "row " + std::to_string(k + 1) + " of the " +
                       u.entry_text(x.var) + "/" + u.entry_text(y.var) +
                       " block meets no outside row in these columns"});
              break;  // one finding per variable pair
            }
          }
        }
    }

  return findings;
}

inline bool audit_fires(const std::vector<AuditFinding>& findings) {
  for (const AuditFinding& f : findings)
    if (!f.informational) return true;
  return false;
}

}  // namespace upb
