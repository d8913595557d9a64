#include <doctest.h>

#include <random>

#include "support/test_util.hpp"
#include "upb/catalog.hpp"
#include "upb/orbit.hpp"
#include "upb/ortho_graph.hpp"

using upb::Uom;

namespace {

// Applies a column mapping to the source column and checks it lands exactly
// on the target column.
bool mapping_sound(const Uom& u, int j1, int j2, const upb::ColumnMapping& map) {
  for (int i = 0; i < u.rows(); ++i) {
    upb::VectorVar src = u.at(i, j1);
    std::size_t f = 0;
    while (f < map.family_from.size() && map.family_from[f] != src.family) ++f;
    if (f == map.family_from.size()) return false;
    upb::VectorVar expected{j2, map.family_to[f],
                            map.swap_prime[f] ? !src.primed : src.primed};
    if (!(u.at(map.row_perm[i], j2) == expected)) return false;
  }
  // row_perm must be a permutation
  std::vector<bool> hit(static_cast<std::size_t>(u.rows()), false);
  for (int i = 0; i < u.rows(); ++i) {
    if (map.row_perm[i] < 0 || hit[map.row_perm[i]]) return false;
    hit[map.row_perm[i]] = true;
  }
  return true;
}

}  // namespace

TEST_CASE("signatures of the 11x7 columns") {
  Uom u = Uom::parse(upb::catalog_text::kUpb11x7);
  CHECK(upb::column_signature(u, 0) == upb::OrbitSignature{{2, 2}, {2, 2}, {2, 1}});
  CHECK(upb::column_signature(u, 2) == upb::OrbitSignature{{3, 2}, {2, 2}, {1, 1}});
  CHECK(upb::signature_string(upb::column_signature(u, 0)) == "[(2,2),(2,2),(2,1)]");
  CHECK_THROWS_AS(upb::column_signature(u, 9), upb::IndexError);
  // single-family column with no primed member
  Uom one_sided = Uom::parse("x a\nx a'");
  CHECK(upb::column_signature(one_sided, 0) == upb::OrbitSignature{{2, 0}});
}

TEST_CASE("orbit partitions of the catalog matrices") {
  auto parts = [](const char* text) {
    return testutil::to_one_based(upb::orbits(Uom::parse(text)));
  };
  CHECK(parts(upb::catalog_text::kUpb11x7) ==
        std::vector<std::vector<int>>{{1, 2}, {3}, {4, 5, 6, 7}});
  CHECK(parts(upb::catalog_text::kUpb6x4) ==
        std::vector<std::vector<int>>{{1}, {2}, {3, 4}});
  CHECK(parts(upb::catalog_text::kUpb8x6) ==
        std::vector<std::vector<int>>{{1}, {2, 3}, {4, 5, 6}});
  CHECK(parts(upb::catalog_text::kUpb11x8) ==
        std::vector<std::vector<int>>{{1}, {2, 3, 4}, {5, 6, 7, 8}});
}

TEST_CASE("orbits agree with iso classes where both are recorded") {
  for (const char* text : {upb::catalog_text::kUpb4x3, upb::catalog_text::kUpb6x4,
                           upb::catalog_text::kUpb8x6, upb::catalog_text::kUpb11x7,
                           upb::catalog_text::kUpb11x8}) {
    Uom u = Uom::parse(text);
    CHECK(upb::orbits(u) == upb::iso_classes(u));
  }
  CHECK(upb::orbits(upb::gen_odd_q(5)) == upb::iso_classes(upb::gen_odd_q(5)));
}

TEST_CASE("orbits refine iso classes on random matrices") {
  std::mt19937 rng(167);
  for (int t = 0; t < 30; ++t) {
    int n = testutil::pick(rng, 2, 5);
    int m = testutil::pick(rng, 2, std::min(8, 1 << n));
    Uom u = testutil::random_orthogonal(rng, m, n);
    auto orbit_classes = upb::orbits(u);
    auto graph_classes = upb::iso_classes(u);
    // same-orbit columns always have isomorphic subgraphs
    std::vector<int> iso_of(static_cast<std::size_t>(n), -1);
    for (std::size_t c = 0; c < graph_classes.size(); ++c)
      for (int j : graph_classes[c]) iso_of[j] = static_cast<int>(c);
    for (const auto& cls : orbit_classes)
      for (int j : cls) CHECK(iso_of[j] == iso_of[cls[0]]);
  }
}

TEST_CASE("signature invariance under the column symmetries") {
  std::mt19937 rng(173);
  Uom base = Uom::parse(upb::catalog_text::kUpb11x7);
  for (int t = 0; t < 25; ++t) {
    Uom::Grid g = base.grid();
    // row permutation
    std::vector<int> perm = testutil::random_permutation(rng, base.rows());
    Uom::Grid shuffled(g.size());
    for (int i = 0; i < base.rows(); ++i) shuffled[perm[i]] = g[i];
    // family renaming and per-family prime swaps, column-scoped
    for (int j = 0; j < base.cols(); ++j) {
      std::vector<std::string> tokens;
      for (auto& row : shuffled)
        if (std::find(tokens.begin(), tokens.end(), row[j].token) == tokens.end())
          tokens.push_back(row[j].token);
      for (const std::string& tok : tokens) {
        bool flip = testutil::pick(rng, 0, 1) == 1;
        std::string renamed = "r" + std::to_string(testutil::pick(rng, 0, 999)) + tok;
        for (auto& row : shuffled)
          if (row[j].token == tok) {
            row[j].token = renamed;
            if (flip) row[j].primed = !row[j].primed;
          }
      }
    }
    Uom v = Uom::from_grid(shuffled);
    for (int j = 0; j < base.cols(); ++j)
      CHECK(upb::column_signature(v, j) == upb::column_signature(base, j));
  }
}

TEST_CASE("equal signatures come with an explicit column mapping") {
  for (const char* text : {upb::catalog_text::kUpb11x7, upb::catalog_text::kUpb8x6,
                           upb::catalog_text::kUpb11x8}) {
    Uom u = Uom::parse(text);
    for (const auto& cls : upb::orbits(u))
      for (std::size_t a = 0; a < cls.size(); ++a)
        for (std::size_t b = 0; b < cls.size(); ++b) {
          auto map = upb::column_mapping(u, cls[a], cls[b]);
          REQUIRE(map.has_value());
          CHECK(mapping_sound(u, cls[a], cls[b], *map));
        }
  }
}

TEST_CASE("different signatures yield no mapping") {
  Uom u = Uom::parse(upb::catalog_text::kUpb11x7);
  CHECK_FALSE(upb::column_mapping(u, 0, 2).has_value());
  CHECK_FALSE(upb::column_mapping(u, 2, 3).has_value());
}

TEST_CASE("column mappings on random matrices") {
  std::mt19937 rng(179);
  for (int t = 0; t < 30; ++t) {
    int n = testutil::pick(rng, 2, 5);
    int m = testutil::pick(rng, 2, std::min(8, 1 << n));
    Uom u = testutil::random_orthogonal(rng, m, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        bool same = upb::column_signature(u, a) == upb::column_signature(u, b);
        auto map = upb::column_mapping(u, a, b);
        CHECK(map.has_value() == same);
        if (map) CHECK(mapping_sound(u, a, b, *map));
      }
  }
}
