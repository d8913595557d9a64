#pragma once

// Exact unextendibility decision for symbolic orthogonal matrices.
//
// A product row orthogonal to every row of the matrix acts column by column:
// in column j its local state is either the partner of one variable occurring
// there (killing exactly the rows carrying that variable) or a state that is
// generic for the column (killing none).  Qubit entries make this symbolic
// search space exhaustive: the only state orthogonal to a variable x is x',
// and distinct families are never orthogonal.  The matrix is unextendible
// exactly when no choice of one target-or-skip per column covers all rows.

#include <bit>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "upb/uom.hpp"

namespace upb {

struct WitnessChoice {
  bool skip = true;
  VectorVar target;  // meaningful when !skip; witness state is partner(target)

  friend bool operator==(const WitnessChoice&, const WitnessChoice&) = default;
};

struct ExtensionWitness {
  std::vector<WitnessChoice> choices;  // one per column
  RowMask coverage = 0;                // rows killed; valid iff all rows
};

// Serialises a witness as a single product row: the local state per column,
// `_` where the column is skipped.
inline std::string witness_text(const Uom& u, const ExtensionWitness& w) {
  std::string out;
  for (int j = 0; j < u.cols(); ++j) {
    if (j) out.push_back(' ');
    if (w.choices[j].skip)
      out.push_back('_');
    else
      out += u.entry_text(partner(w.choices[j].target));
  }
  return out;
}

// Re-checks a witness against the definition: every row must hold the
// targeted variable of some column.
inline bool witness_valid(const Uom& u, const ExtensionWitness& w) {
  if (static_cast<int>(w.choices.size()) != u.cols()) return false;
  RowMask covered = 0;
  for (int j = 0; j < u.cols(); ++j) {
    const WitnessChoice& c = w.choices[j];
    if (c.skip) continue;
    if (c.target.column != j) return false;
    covered |= u.rows_with(c.target);
  }
  return covered == w.coverage && covered == u.all_rows_mask();
}

namespace detail {

struct ColumnChoices {
  std::vector<VectorVar> vars;   // occurring variables, deterministic order
  std::vector<RowMask> kills;    // rows carrying vars[i]
  int max_kill = 0;
};

// Occurring variables per column in (family first-occurrence, unprimed-first)
// order; this order defines the lexicographic ranking of witnesses, with
// Skip ranking before any target.
inline std::vector<ColumnChoices> column_choices(const Uom& u) {
  std::vector<ColumnChoices> out(static_cast<std::size_t>(u.cols()));
  for (int j = 0; j < u.cols(); ++j) {
    ColumnChoices& cc = out[j];
    for (int id : u.column_families(j))
      for (bool primed : {false, true}) {
        VectorVar v{j, id, primed};
        RowMask rows = u.rows_with(v);
        if (rows == 0) continue;
        cc.vars.push_back(v);
        cc.kills.push_back(rows);
        cc.max_kill = std::max(cc.max_kill, std::popcount(rows));
      }
  }
  return out;
}

}  // namespace detail

// Depth-first search over per-column choices, pruning when the remaining
// columns cannot cover the remaining rows.  Choices are explored in
// lexicographic order (Skip first), so the first witness found is the least
// one; results are reproducible byte for byte.
inline std::optional<ExtensionWitness> find_extension(const Uom& u) {
  u.require_validated("find_extension");
  const int n = u.cols();
  const RowMask full = u.all_rows_mask();
  std::vector<detail::ColumnChoices> cols = detail::column_choices(u);

  std::vector<int> suffix_max(static_cast<std::size_t>(n) + 1, 0);
  for (int j = n - 1; j >= 0; --j) suffix_max[j] = suffix_max[j + 1] + cols[j].max_kill;

  std::vector<int> picks(static_cast<std::size_t>(n), -1);  // -1 = skip
  std::optional<ExtensionWitness> found;

  auto rec = [&](auto&& self, int j, RowMask covered) -> bool {
    if (covered == full) {
      ExtensionWitness w;
      w.coverage = covered;
      w.choices.resize(static_cast<std::size_t>(n));
      for (int jj = 0; jj < n; ++jj) {
        if (jj < j && picks[jj] >= 0)
          w.choices[jj] = {false, cols[jj].vars[picks[jj]]};
        else
          w.choices[jj] = {};  // skip
      }
      found = std::move(w);
      return true;
    }
    if (j == n) return false;
    if (std::popcount(full & ~covered) > suffix_max[j]) return false;
    picks[j] = -1;
    if (self(self, j + 1, covered)) return true;
    for (int c = 0; c < static_cast<int>(cols[j].vars.size()); ++c) {
      picks[j] = c;
      if (self(self, j + 1, covered | cols[j].kills[c])) return true;
    }
    picks[j] = -1;
    return false;
  };
  rec(rec, 0, 0);
  return found;
}

inline bool is_upb(const Uom& u) { return !find_extension(u).has_value(); }

inline long long default_oracle_budget() {
  if (const char* env = std::getenv("UPB_SEARCH_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 100000000;  // 1e8
}

// Exhaustive enumeration of the full choice space, no pruning.  Test-only
// certification oracle for find_extension; returns the same least witness.
inline std::optional<ExtensionWitness> naive_extension_oracle(
    const Uom& u, long long budget = default_oracle_budget()) {
  u.require_validated("naive_extension_oracle");
  const int n = u.cols();
  const RowMask full = u.all_rows_mask();
  std::vector<detail::ColumnChoices> cols = detail::column_choices(u);

  long long total = 1;
  for (const auto& cc : cols) {
    long long choices = static_cast<long long>(cc.vars.size()) + 1;
    if (total > budget / choices)
      throw BudgetExceeded("naive oracle would enumerate more than " +
                           std::to_string(budget) + " tuples");
    total *= choices;
  }

  std::vector<int> odo(static_cast<std::size_t>(n), -1);  // -1 = skip
  for (long long step = 0; step < total; ++step) {
    RowMask covered = 0;
    for (int j = 0; j < n; ++j)
      if (odo[j] >= 0) covered |= cols[j].kills[odo[j]];
    if (covered == full) {
      ExtensionWitness w;
      w.coverage = covered;
      w.choices.resize(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j)
        if (odo[j] >= 0) w.choices[j] = {false, cols[j].vars[odo[j]]};
      return w;
    }
    // advance the odometer, least significant column last
    for (int j = n - 1; j >= 0; --j) {
      if (odo[j] + 1 < static_cast<int>(cols[j].vars.size())) {
        ++odo[j];
        break;
      }
      odo[j] = -1;
    }
  }
  return std::nullopt;
}

}  // namespace upb
