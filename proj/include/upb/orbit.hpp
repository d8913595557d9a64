#pragma once

// Column orbit signatures.
//
// Read a column as a product vector with one tensor factor per row.  A
// per-family 2x2 unitary can carry any basis pair onto any other, and
// permuting tensor factors reorders the rows, so two columns lie in the same
// orbit under local unitaries plus system permutation exactly when their
// multisets of family multiplicity pairs coincide.  The mapping realising
// the equivalence is constructed explicitly.

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "upb/uom.hpp"

namespace upb {

// Multiset of (max(mu, mu'), min(mu, mu')) per family present, descending.
using OrbitSignature = std::vector<std::pair<int, int>>;

inline OrbitSignature column_signature(const Uom& u, int j) {
  if (j < 0 || j >= u.cols()) throw IndexError("column index out of range");
  OrbitSignature sig;
  for (int id : u.column_families(j)) {
    int mu = std::popcount(u.rows_with({j, id, false}));
    int mu_prime = std::popcount(u.rows_with({j, id, true}));
    if (mu + mu_prime == 0) continue;
    sig.push_back({std::max(mu, mu_prime), std::min(mu, mu_prime)});
  }
  std::sort(sig.begin(), sig.end(), [](const auto& a, const auto& b) { return a > b; });
  return sig;
}

inline std::string signature_string(const OrbitSignature& sig) {
  std::string out = "[";
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (i) out.push_back(',');
    out += "(" + std::to_string(sig[i].first) + "," + std::to_string(sig[i].second) + ")";
  }
  out.push_back(']');
  return out;
}

// Columns grouped by equal signature; classes ordered by smallest member.
inline std::vector<std::vector<int>> orbits(const Uom& u) {
  u.require_validated("orbits");
  std::vector<OrbitSignature> sig(static_cast<std::size_t>(u.cols()));
  for (int j = 0; j < u.cols(); ++j) sig[j] = column_signature(u, j);
  std::vector<std::vector<int>> classes;
  std::vector<bool> done(static_cast<std::size_t>(u.cols()), false);
  for (int j = 0; j < u.cols(); ++j) {
    if (done[j]) continue;
    std::vector<int> cls;
    for (int k = j; k < u.cols(); ++k)
      if (!done[k] && sig[k] == sig[j]) {
        cls.push_back(k);
        done[k] = true;
      }
    classes.push_back(std::move(cls));
  }
  return classes;
}

// Witness that two columns are orbit-equivalent: a family bijection with an
// optional prime swap per family, plus a row permutation carrying column j1
// onto column j2.
struct ColumnMapping {
  std::vector<int> family_from;    // family ids in column j1
  std::vector<int> family_to;      // matched family ids in column j2
  std::vector<bool> swap_prime;    // per matched pair
  std::vector<int> row_perm;       // row i of j1 corresponds to row_perm[i] of j2
};

inline std::optional<ColumnMapping> column_mapping(const Uom& u, int j1, int j2) {
  if (column_signature(u, j1) != column_signature(u, j2)) return std::nullopt;

  struct Fam {
    int id;
    RowMask plain, primed;
    std::pair<int, int> shape;  // (max, min)
    bool primed_is_major;
  };
  auto collect = [&](int j) {
    std::vector<Fam> fams;
    for (int id : u.column_families(j)) {
      Fam f;
      f.id = id;
      f.plain = u.rows_with({j, id, false});
      f.primed = u.rows_with({j, id, true});
      if (f.plain == 0 && f.primed == 0) continue;
      int a = std::popcount(f.plain), b = std::popcount(f.primed);
      f.shape = {std::max(a, b), std::min(a, b)};
      f.primed_is_major = b > a;
      fams.push_back(f);
    }
    std::sort(fams.begin(), fams.end(), [](const Fam& x, const Fam& y) {
      if (x.shape != y.shape) return x.shape > y.shape;
      return x.id < y.id;
    });
    return fams;
  };
  std::vector<Fam> from = collect(j1), to = collect(j2);

  ColumnMapping map;
  map.row_perm.assign(static_cast<std::size_t>(u.rows()), -1);
  for (std::size_t f = 0; f < from.size(); ++f) {
    const Fam& a = from[f];
    const Fam& b = to[f];
    // align major side with major side; swap_prime records whether the
    // unprimed member of a maps to the primed member of b
    bool swap = a.primed_is_major != b.primed_is_major;
    map.family_from.push_back(a.id);
    map.family_to.push_back(b.id);
    map.swap_prime.push_back(swap);
    auto assign = [&](RowMask src, RowMask dst) {
      while (src) {
        int i = std::countr_zero(src);
        src &= src - 1;
        int k = std::countr_zero(dst);
        dst &= dst - 1;
        map.row_perm[i] = k;
      }
    };
    assign(a.plain, swap ? b.primed : b.plain);
    assign(a.primed, swap ? b.plain : b.primed);
  }
  return map;
}

}  // namespace upb
