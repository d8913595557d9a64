#include <doctest.h>

#include <random>

#include "support/test_util.hpp"
#include "upb/catalog.hpp"
#include "upb/ortho_graph.hpp"

using upb::OrthoGraph;
using upb::SimpleGraph;
using upb::Uom;

namespace {

SimpleGraph triangle() {
  SimpleGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  return g;
}

}  // namespace

TEST_CASE("edge counts match the recorded pair sums") {
  OrthoGraph g7 = upb::build_graph(Uom::parse(upb::catalog_text::kUpb11x7));
  CHECK(g7.vertices == 11);
  CHECK(g7.edges.size() == 55);
  OrthoGraph g86 = upb::build_graph(Uom::parse(upb::catalog_text::kUpb8x6));
  CHECK(g86.edges.size() == 28);
  OrthoGraph g1 = upb::build_graph(Uom::parse("a b c\n"));
  CHECK(g1.vertices == 1);
  CHECK(g1.edges.empty());
}

TEST_CASE("edge count equals the sum of column p values on random matrices") {
  std::mt19937 rng(131);
  for (int t = 0; t < 40; ++t) {
    int n = testutil::pick(rng, 2, 5);
    int m = testutil::pick(rng, 2, std::min(8, 1 << n));
    Uom u = testutil::random_orthogonal(rng, m, n);
    long long sum_p = 0;
    for (int j = 0; j < n; ++j) sum_p += upb::column_stats(u, j).p;
    CHECK(static_cast<long long>(upb::build_graph(u).edges.size()) == sum_p);
  }
}

TEST_CASE("complete single-pair property") {
  CHECK(upb::is_complete_single_pair(Uom::parse(upb::catalog_text::kUpb11x7)));
  CHECK(upb::is_complete_single_pair(Uom::parse(upb::catalog_text::kUpb11x8)));
  CHECK(upb::is_complete_single_pair(Uom::parse(upb::catalog_text::kUpb6x4)));
  // rows 00 and 11 of the two-qubit standard basis are orthogonal twice
  CHECK_FALSE(upb::is_complete_single_pair(upb::detail::standard_basis(2)));
  CHECK(upb::is_complete_single_pair(upb::gen_odd_q(5)));
}

TEST_CASE("column subgraphs of the 11x7 matrix") {
  Uom u = Uom::parse(upb::catalog_text::kUpb11x7);
  OrthoGraph g = upb::build_graph(u);
  CHECK(upb::column_subgraph(g, 3).edge_count() == 6);    // column 4, p = 6
  CHECK(upb::column_subgraph(g, 2).edge_count() == 11);   // column 3, p = 11
  CHECK_THROWS_AS(upb::column_subgraph(g, 7), upb::IndexError);
  // a column whose family never pairs up yields an empty subgraph
  Uom one_sided = Uom::parse("x a\nx a'");
  CHECK(upb::column_subgraph(upb::build_graph(one_sided), 0).edge_count() == 0);
}

TEST_CASE("iso classes of the catalog matrices") {
  auto classes = [](const char* text) {
    return testutil::to_one_based(upb::iso_classes(Uom::parse(text)));
  };
  CHECK(classes(upb::catalog_text::kUpb11x7) ==
        std::vector<std::vector<int>>{{1, 2}, {3}, {4, 5, 6, 7}});
  CHECK(classes(upb::catalog_text::kUpb6x4) ==
        std::vector<std::vector<int>>{{1}, {2}, {3, 4}});
  CHECK(classes(upb::catalog_text::kUpb8x6) ==
        std::vector<std::vector<int>>{{1}, {2, 3}, {4, 5, 6}});
  CHECK(classes(upb::catalog_text::kUpb11x8) ==
        std::vector<std::vector<int>>{{1}, {2, 3, 4}, {5, 6, 7, 8}});
}

TEST_CASE("iso classes are invariant under row permutation and family renaming") {
  std::mt19937 rng(137);
  Uom u = Uom::parse(upb::catalog_text::kUpb8x6);
  auto expected = upb::iso_classes(u);
  for (int t = 0; t < 10; ++t) {
    Uom::Grid g = u.grid();
    std::vector<int> perm = testutil::random_permutation(rng, u.rows());
    Uom::Grid shuffled(g.size());
    for (int i = 0; i < u.rows(); ++i) shuffled[perm[i]] = g[i];
    for (auto& row : shuffled)
      for (auto& e : row) e.token = "renamed_" + e.token;  // column-scoped anyway
    CHECK(upb::iso_classes(Uom::from_grid(shuffled)) == expected);
  }
}

TEST_CASE("containment chain across the 6x4, 8x6 and 11x8 constructions") {
  OrthoGraph g4 = upb::build_graph(Uom::parse(upb::catalog_text::kUpb6x4));
  OrthoGraph g6 = upb::build_graph(Uom::parse(upb::catalog_text::kUpb8x6));
  OrthoGraph g8 = upb::build_graph(Uom::parse(upb::catalog_text::kUpb11x8));
  auto col = [](const OrthoGraph& g, int j) { return upb::column_subgraph(g, j - 1); };

  // first chain: (1)_4 into (1)_6 into (2)_8, with (2)_8 ~ (3)_8 ~ (4)_8
  CHECK(upb::subgraph_embeds(col(g4, 1), col(g6, 1)));
  CHECK(upb::subgraph_embeds(col(g6, 1), col(g8, 2)));
  CHECK(upb::canonical_label(col(g8, 2)) == upb::canonical_label(col(g8, 3)));
  CHECK(upb::canonical_label(col(g8, 3)) == upb::canonical_label(col(g8, 4)));

  // second chain: (2)_4 into (2)_6 ~ (3)_6 into (1)_8
  CHECK(upb::subgraph_embeds(col(g4, 2), col(g6, 2)));
  CHECK(upb::canonical_label(col(g6, 2)) == upb::canonical_label(col(g6, 3)));
  CHECK(upb::subgraph_embeds(col(g6, 3), col(g8, 1)));

  // third chain: (3)_4 ~ (4)_4 into (4)_6 ~ (5)_6 ~ (6)_6 into (5)_8,
  // with (5)_8 ~ (6)_8 ~ (7)_8 ~ (8)_8
  CHECK(upb::canonical_label(col(g4, 3)) == upb::canonical_label(col(g4, 4)));
  CHECK(upb::subgraph_embeds(col(g4, 3), col(g6, 4)));
  CHECK(upb::canonical_label(col(g6, 4)) == upb::canonical_label(col(g6, 5)));
  CHECK(upb::canonical_label(col(g6, 5)) == upb::canonical_label(col(g6, 6)));
  CHECK(upb::subgraph_embeds(col(g6, 6), col(g8, 5)));
  for (int j : {6, 7, 8})
    CHECK(upb::canonical_label(col(g8, 5)) == upb::canonical_label(col(g8, j)));

  // negative control: no column graph of the 6x4 matrix contains a triangle
  CHECK_FALSE(upb::subgraph_embeds(triangle(), col(g4, 1)));
}
