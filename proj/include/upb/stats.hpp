#pragma once

// Per-column orthogonality statistics.
//
// For a column, sigma counts the independent families present and p sums
// mu(x)*mu(x') over those families; p equals the number of row pairs the
// column makes orthogonal.  Summed over columns, p counts every
// (row pair, column) orthogonality incidence, which is why a validated
// orthogonal matrix always satisfies sum_j p_j >= m(m-1)/2.

#include <bit>
#include <set>
#include <vector>

#include "upb/uom.hpp"

namespace upb {

struct ColumnStats {
  int sigma = 0;                              // families with mu + mu' > 0
  std::vector<std::pair<int, int>> pairs;     // (mu_x, mu_xprime), sorted descending
  int p = 0;                                  // sum of mu_x * mu_xprime
};

inline ColumnStats column_stats(const Uom& u, int j) {
  if (j < 0 || j >= u.cols()) throw IndexError("column index out of range");
  ColumnStats st;
  for (int id : u.column_families(j)) {
    int mu = std::popcount(u.rows_with({j, id, false}));
    int mu_prime = std::popcount(u.rows_with({j, id, true}));
    if (mu + mu_prime == 0) continue;
    st.pairs.push_back({mu, mu_prime});
    st.p += mu * mu_prime;
  }
  std::sort(st.pairs.begin(), st.pairs.end(),
            [](const auto& a, const auto& b) { return a > b; });
  st.sigma = static_cast<int>(st.pairs.size());
  return st;
}

struct PairBound {
  long long lhs = 0;  // sum of p_j
  long long rhs = 0;  // m(m-1)/2
  bool holds = false;
};

inline PairBound pair_bound(const Uom& u) {
  u.require_validated("pair_bound");
  PairBound b;
  for (int j = 0; j < u.cols(); ++j) b.lhs += column_stats(u, j).p;
  b.rhs = static_cast<long long>(u.rows()) * (u.rows() - 1) / 2;
  b.holds = b.lhs >= b.rhs;
  return b;
}

inline bool pair_bound_holds(const Uom& u) { return pair_bound(u).holds; }

// Feasible p values of an 11-row column with the given number of independent
// families.  Every family of a column of an unextendible matrix carries both
// basis members, and no variable can repeat more than four times, so the
// decompositions range over pairs 4 >= mu >= mu' >= 1 summing to 11.
inline std::set<int> sigma_p_feasible(int sigma, int m = 11) {
  if (m != 11) throw DomainError("sigma_p_feasible is stated for m = 11");
  if (sigma < 2 || sigma > 5) throw DomainError("sigma must be in [2, 5]");
  std::set<int> out;
  std::vector<std::pair<int, int>> chosen;
  auto rec = [&](auto&& self, int families_left, int remaining,
                 std::pair<int, int> max_pair) -> void {
    if (families_left == 0) {
      if (remaining == 0) {
        int p = 0;
        for (auto [a, b] : chosen) p += a * b;
        out.insert(p);
      }
      return;
    }
    // enumerate non-increasing pair sequences to avoid duplicates
    for (int a = std::min(4, max_pair.first); a >= 1; --a)
      for (int b = (a == max_pair.first ? std::min(a, max_pair.second) : a); b >= 1; --b) {
        if (a + b > remaining) continue;
        chosen.push_back({a, b});
        self(self, families_left - 1, remaining - a - b, {a, b});
        chosen.pop_back();
      }
  };
  rec(rec, sigma, m, {4, 4});
  return out;
}

}  // namespace upb
