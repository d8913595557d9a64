#pragma once

// Built-in matrix constructions, the minimum-size function, known size
// tables, and the circulant generator for odd local counts.
//
// Catalog matrices are embedded as text and parsed at load, so transcription
// slips surface as validation failures.  Each entry carries its recorded
// facts, and loading re-derives every one of them.

#include <set>
#include <string>
#include <vector>

#include "upb/extension.hpp"
#include "upb/locc.hpp"
#include "upb/orbit.hpp"
#include "upb/ortho_graph.hpp"
#include "upb/stats.hpp"
#include "upb/uom.hpp"

namespace upb {

struct CatalogExpect {
  std::vector<int> p;                            // per-column p_j
  long long sum_p = 0;
  bool is_upb = false;
  bool complete_single_pair = false;
  std::vector<std::vector<int>> iso_classes;     // 0-based columns
  std::vector<std::vector<int>> orbit_classes;   // 0-based columns
  bool pair_bipartitions_indistinguishable = false;  // every |S| = 2 subset
};

struct CatalogEntry {
  std::string name;
  Uom uom;
  std::string provenance;
  CatalogExpect expected;
};

namespace catalog_text {

inline constexpr const char* kUpb4x3 = R"(0 0 0
1 b c
a 1 c'
a' b' 1
)";

inline constexpr const char* kUpb6x4 = R"(b1 b1 b1 b1
b1 b2 b1' b2
b1' b1 b3 b3
b1' b2 b4 b3'
b5 b2' b3' b1'
b5' b1' b4' b2'
)";

inline constexpr const char* kUpb8x6 = R"(c1 c1 c1 c1 c1 c1
c1 c2 c2 c1' c2 c2
c1' c1 c2 c3 c3 c3
c1' c2 c1 c3' c4 c4
c5 c5 c2' c5 c1' c4'
c5' c2' c6 c6 c3' c1'
c7 c1' c6' c5' c4' c2'
c7' c5' c1' c6' c2' c3'
)";

inline constexpr const char* kUpb11x7 = R"(a1 a1 a1 a1 a1 a1 a1
a1 a2 a2 a2 a1' a2 a2
a1' a2 a1 a3 a3 a3 a3
a1' a1 a2 a4 a4 a4 a3'
a4 a1' a5 a2' a5 a3' a5
a4 a1' a1 a3' a6 a2' a5'
a4' a7 a2' a7 a3' a1' a7
a4' a7' a2' a3' a6 a8 a1'
a9 a7' a1' a4' a5' a8' a2'
a9 a7 a1' a7' a4' a2' a5'
a9' a2' a5' a1' a6' a4' a7'
)";

inline constexpr const char* kUpb11x8 = R"(d1 d1 d1 d1 d1 d1 d1 d1
d1' d2 d2 d2 d2 d2 d2 d2
d3 d2' d3 d3 d1' d3 d3 d3
d4 d3 d4 d3' d3 d1' d4 d2'
d5 d1' d2' d4 d4 d3' d4' d4
d3' d3' d1 d4' d5 d2' d1' d5
d5' d7 d4' d2' d5' d4 d3' d1'
d4' d7 d3' d1' d4' d4' d2' d5'
d4' d7' d1' d4' d2' d5 d5 d3'
d5' d7' d3' d1' d3' d5' d2' d5'
d3' d3' d1' d1 d5 d2' d5' d4'
)";

}  // namespace catalog_text

// The (q+1) x q circulant construction for odd q >= 3: row 0 is all zeros
// and row i shifts the pattern [1, psi_1, ..., psi_(q-1)/2, psi'_(q-1)/2,
// ..., psi'_1] by i-1 positions.  Every column carries (q+1)/2 orthogonal
// pairs and every row pair exactly one, so the matrix is unextendible and
// its orthogonality graph is the complete graph on q+1 vertices.
inline Uom gen_odd_q(int q) {
  if (q < 3 || q % 2 == 0) throw DomainError("q must be odd and at least 3");
  if (q > kMaxCols) throw TooLarge("q exceeds the supported column count");
  Uom::Grid grid(static_cast<std::size_t>(q) + 1);
  grid[0].assign(static_cast<std::size_t>(q), {"std", false});
  const int half = (q - 1) / 2;
  for (int i = 1; i <= q; ++i) {
    grid[i].reserve(static_cast<std::size_t>(q));
    for (int j = 0; j < q; ++j) {
      int idx = ((j - (i - 1)) % q + q) % q;
      if (idx == 0)
        grid[i].push_back({"std", true});
      else if (idx <= half)
        grid[i].push_back({"psi" + std::to_string(idx), false});
      else
        grid[i].push_back({"psi" + std::to_string(q - idx), true});
    }
  }
  return Uom::from_grid(grid);
}

// Minimum size of a p-qubit unextendible product basis.
inline int min_upb_size(int p) {
  if (p < 1) throw DomainError("qubit count must be positive");
  if (p % 2 == 1) return p + 1;
  if (p == 4 || p % 4 == 2) return p + 2;
  if (p == 8) return p + 3;
  return p + 4;
}

// Sizes for which n-qubit UPBs are known to exist, n in {7, 8}.
inline std::set<int> known_sizes(int n) {
  std::set<int> out;
  if (n == 7) {
    out.insert(8);
    for (int m = 10; m <= 122; ++m) out.insert(m);
    out.insert(124);
    out.insert(128);
  } else if (n == 8) {
    for (int m = 11; m <= 250; ++m) out.insert(m);
    out.insert(252);
    out.insert(256);
  } else {
    throw UnknownName("known sizes are recorded for 7 and 8 qubits only");
  }
  return out;
}

inline std::vector<std::string> catalog_names() {
  return {"upb_4x3",  "upb_6x4",          "upb_8x6",          "upb_11x7",
          "upb_11x8", "standard_basis_2", "standard_basis_3", "standard_basis_4"};
}

namespace detail {

inline Uom standard_basis(int n) {
  if (n < 1 || n > 4)
    throw DomainError("standard_basis is provided for 1 to 4 qubits");
  Uom::Grid grid(std::size_t{1} << n);
  for (int r = 0; r < (1 << n); ++r) {
    grid[r].reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      grid[r].push_back({"std", ((r >> (n - 1 - j)) & 1) != 0});
  }
  return Uom::from_grid(grid);
}

inline void verify_entry(const CatalogEntry& e) {
  auto bail = [&](const std::string& what) {
    throw std::logic_error("catalog self-check failed for " + e.name + ": " + what);
  };
  const Uom& u = e.uom;
  if (!u.validated()) bail("not a validated orthogonal matrix");
  long long sum = 0;
  for (int j = 0; j < u.cols(); ++j) {
    int p = column_stats(u, j).p;
    if (p != e.expected.p[j]) bail("p mismatch in column " + std::to_string(j + 1));
    sum += p;
  }
  if (sum != e.expected.sum_p) bail("sum of p mismatch");
  if (is_upb(u) != e.expected.is_upb) bail("unextendibility mismatch");
  if (is_complete_single_pair(u) != e.expected.complete_single_pair)
    bail("complete-graph property mismatch");
  if (iso_classes(u) != e.expected.iso_classes) bail("iso-class partition mismatch");
  if (orbits(u) != e.expected.orbit_classes) bail("orbit partition mismatch");
  if (e.expected.pair_bipartitions_indistinguishable) {
    for (const BipartitionReport& r : audit_all_pairs(u, 2))
      if (r.verdict != Verdict::Indistinguishable) bail("pair bipartition split found");
  }
}

inline CatalogEntry make_entry(const std::string& name) {
  CatalogEntry e;
  e.name = name;
  if (name == "upb_4x3") {
    e.uom = Uom::parse(catalog_text::kUpb4x3);
    e.provenance = "three-qubit unextendible product basis of size four";
    e.expected = {{2, 2, 2}, 6, true, true, {{0, 1, 2}}, {{0, 1, 2}}, false};
  } else if (name == "upb_6x4") {
    e.uom = Uom::parse(catalog_text::kUpb6x4);
    e.provenance =
        "four-qubit UPB of minimum size six; recorded as the unique 6x4 "
        "construction (uniqueness not re-verified here)";
    e.expected = {{5, 4, 3, 3}, 15, true, true, {{0}, {1}, {2, 3}}, {{0}, {1}, {2, 3}}, false};
  } else if (name == "upb_8x6") {
    e.uom = Uom::parse(catalog_text::kUpb8x6);
    e.provenance = "six-qubit UPB of minimum size eight";
    e.expected = {{6, 5, 5, 4, 4, 4},
                  28,
                  true,
                  true,
                  {{0}, {1, 2}, {3, 4, 5}},
                  {{0}, {1, 2}, {3, 4, 5}},
                  false};
  } else if (name == "upb_11x7") {
    e.uom = Uom::parse(catalog_text::kUpb11x7);
    e.provenance = "seven-qubit unextendible product basis of size eleven";
    e.expected = {{10, 10, 11, 6, 6, 6, 6},
                  55,
                  true,
                  true,
                  {{0, 1}, {2}, {3, 4, 5, 6}},
                  {{0, 1}, {2}, {3, 4, 5, 6}},
                  true};
  } else if (name == "upb_11x8") {
    e.uom = Uom::parse(catalog_text::kUpb11x8);
    e.provenance = "eight-qubit UPB of minimum size eleven";
    e.expected = {{7, 8, 8, 8, 6, 6, 6, 6},
                  55,
                  true,
                  true,
                  {{0}, {1, 2, 3}, {4, 5, 6, 7}},
                  {{0}, {1, 2, 3}, {4, 5, 6, 7}},
                  false};
  } else if (name.rfind("standard_basis_", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(name.substr(std::string("standard_basis_").size()));
    } catch (const std::exception&) {
      throw UnknownName("unknown catalog name: " + name);
    }
    e.uom = standard_basis(n);
    e.provenance = "standard computational basis on " + std::to_string(n) + " qubit(s)";
    int per_col = 1 << (2 * (n - 1));
    std::vector<int> p(static_cast<std::size_t>(n), per_col);
    std::vector<int> all_cols;
    for (int j = 0; j < n; ++j) all_cols.push_back(j);
    e.expected = {p,      static_cast<long long>(n) * per_col, true, n == 1,
                  {all_cols}, {all_cols}, false};
  } else {
    throw UnknownName("unknown catalog name: " + name);
  }
  return e;
}

}  // namespace detail

// Loads a catalog entry and re-derives each of its recorded facts.
inline CatalogEntry builtin(const std::string& name) {
  CatalogEntry e = detail::make_entry(name);
  detail::verify_entry(e);
  return e;
}

}  // namespace upb
