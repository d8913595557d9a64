#include <doctest.h>

#include <random>

#include "support/test_util.hpp"
#include "upb/catalog.hpp"
#include "upb/stats.hpp"
#include "upb/uom.hpp"

using upb::Uom;

TEST_CASE("parser accepts the classic 4x3 matrix") {
  Uom u = Uom::parse(upb::catalog_text::kUpb4x3);
  CHECK(u.rows() == 4);
  CHECK(u.cols() == 3);
  CHECK(u.validated());
  // 0/1 literals normalise to the per-column std family
  CHECK(u.entry_text(u.at(0, 0)) == "std");
  CHECK(u.entry_text(u.at(1, 0)) == "std'");
  CHECK(u.entry_text(u.at(2, 0)) == "a");
  CHECK(u.entry_text(u.at(3, 0)) == "a'");
}

TEST_CASE("parser handles single rows, comments and blank lines") {
  Uom u = Uom::parse("# comment\n\na b\n");
  CHECK(u.rows() == 1);
  CHECK(u.cols() == 2);
  CHECK(u.validated());  // no pairs to check
}

TEST_CASE("parser rejections") {
  CHECK_THROWS_AS(Uom::parse("a a\na a"), upb::ParseError);       // no orthogonal column
  CHECK_NOTHROW(Uom::parse("a a'\na a"));                         // col 2 separates
  CHECK_THROWS_AS(Uom::parse("a b\nc"), upb::ParseError);         // ragged row
  CHECK_THROWS_AS(Uom::parse("2x y\nz w"), upb::ParseError);      // bad token
  CHECK_THROWS_AS(Uom::parse("0' a\n1 a'"), upb::ParseError);     // primed literal
  Uom audit = Uom::parse("a a\na a", false);                      // parse-only mode
  CHECK_FALSE(audit.validated());
  CHECK(audit.first_violation() == std::pair<int, int>{0, 1});
  CHECK_THROWS_AS(upb::pair_bound(audit), upb::UnvalidatedMatrix);
}

TEST_CASE("from_vector_vars rejects family leaks") {
  std::vector<upb::Family> fams = {{0, "a"}, {1, "b"}};
  std::vector<upb::VectorVar> entries = {
      {0, 0, false}, {1, 0, false},  // family 0 leaks into column 1
      {0, 0, true}, {1, 1, false}};
  CHECK_THROWS_AS(Uom::from_vector_vars(2, 2, entries, fams), upb::ParseError);
}

TEST_CASE("serialisation round-trips") {
  Uom u = Uom::parse(upb::catalog_text::kUpb11x7);
  Uom back = Uom::parse(u.serialize());
  CHECK(back.structurally_equal(u));
  CHECK(u.structurally_equal(back));

  Uom empty = Uom::parse("");
  CHECK(empty.rows() == 0);
  CHECK(empty.cols() == 0);
  CHECK(empty.serialize() == "");
  CHECK(Uom::parse(empty.serialize()).rows() == 0);

  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    Uom r = testutil::random_orthogonal(rng, 6, 4);
    CHECK(Uom::parse(r.serialize()).structurally_equal(r));
  }
}

TEST_CASE("orthogonal_columns on the 11x7 matrix") {
  Uom u = Uom::parse(upb::catalog_text::kUpb11x7);
  // rows 1 and 2 are separated exactly by column 5 (1-based)
  CHECK(u.orthogonal_columns(0, 1) == std::vector<int>{4});
  CHECK_THROWS_AS(u.orthogonal_columns(3, 3), upb::IndexError);
  CHECK_THROWS_AS(u.orthogonal_columns(0, 11), upb::IndexError);
  for (int i = 0; i < u.rows(); ++i)
    for (int k = i + 1; k < u.rows(); ++k)
      CHECK(u.orthogonal_columns(i, k).size() == 1);
}

TEST_CASE("multiplicities of the 11x7 matrix") {
  Uom u = Uom::parse(upb::catalog_text::kUpb11x7);
  CHECK(u.multiplicity(2, "a1", false) == 3);  // the one triple entry
  CHECK(u.multiplicity(2, "zz", false) == 0);
  CHECK(u.multiplicity(0, "a1", true) == 2);
  int triples = 0;
  for (int j = 0; j < u.cols(); ++j)
    for (int id : u.column_families(j))
      for (bool primed : {false, true}) {
        int mu = u.multiplicity({j, id, primed});
        CHECK(mu <= 3);
        if (mu == 3) {
          ++triples;
          CHECK(j == 2);
          CHECK(u.family(id).token == "a1");
          CHECK_FALSE(primed);
        }
      }
  CHECK(triples == 1);
}

TEST_CASE("column stats reproduce the recorded p vectors") {
  Uom u7 = Uom::parse(upb::catalog_text::kUpb11x7);
  std::vector<int> p7;
  for (int j = 0; j < u7.cols(); ++j) p7.push_back(upb::column_stats(u7, j).p);
  CHECK(p7 == std::vector<int>{10, 10, 11, 6, 6, 6, 6});
  // p_3 = 11 = 3x2 + 2x2 + 1x1
  upb::ColumnStats c3 = upb::column_stats(u7, 2);
  CHECK(c3.pairs == std::vector<std::pair<int, int>>{{3, 2}, {2, 2}, {1, 1}});
  CHECK(c3.sigma == 3);

  Uom u86 = Uom::parse(upb::catalog_text::kUpb8x6);
  std::vector<int> p86;
  int sum86 = 0;
  for (int j = 0; j < u86.cols(); ++j) {
    p86.push_back(upb::column_stats(u86, j).p);
    sum86 += p86.back();
  }
  CHECK(p86 == std::vector<int>{6, 5, 5, 4, 4, 4});
  CHECK(sum86 == 28);

  // a column whose family never shows its partner has p = 0
  Uom plain = Uom::parse("x a\nx a'\nx' b\nx' b'", false);
  CHECK(plain.validated());
  Uom one_sided = Uom::parse("x a\nx a'", true);
  CHECK(upb::column_stats(one_sided, 0).p == 0);
  CHECK(upb::column_stats(one_sided, 0).sigma == 1);

  CHECK_THROWS_AS(upb::column_stats(u7, 7), upb::IndexError);
}

TEST_CASE("column stats invariants on random matrices") {
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    int n = std::uniform_int_distribution<int>(2, 5)(rng);
    int m = std::uniform_int_distribution<int>(2, std::min(8, 1 << n))(rng);
    Uom u = testutil::random_orthogonal(rng, m, n);
    long long sum_p = 0;
    for (int j = 0; j < n; ++j) {
      upb::ColumnStats st = upb::column_stats(u, j);
      int entries = 0, p_again = 0, sigma_again = 0;
      for (int id : u.column_families(j)) {
        int mu = u.multiplicity({j, id, false});
        int mu_prime = u.multiplicity({j, id, true});
        entries += mu + mu_prime;
        p_again += mu * mu_prime;
        if (mu + mu_prime > 0) ++sigma_again;
      }
      CHECK(entries == m);
      CHECK(st.p == p_again);
      CHECK(st.sigma == sigma_again);
      sum_p += st.p;
    }
    CHECK(sum_p == testutil::incidence_count(u));
    upb::PairBound b = upb::pair_bound(u);
    CHECK(b.lhs == sum_p);
    CHECK(b.rhs == static_cast<long long>(m) * (m - 1) / 2);
    CHECK(b.holds);
    for (int i = 0; i < m; ++i)
      for (int k = i + 1; k < m; ++k)
        CHECK_FALSE(u.orthogonal_columns(i, k).empty());
  }
}

TEST_CASE("pair bound on the catalog matrices") {
  upb::PairBound b7 = upb::pair_bound(Uom::parse(upb::catalog_text::kUpb11x7));
  CHECK(b7.lhs == 55);
  CHECK(b7.rhs == 55);
  CHECK(b7.holds);

  upb::PairBound b8 = upb::pair_bound(Uom::parse(upb::catalog_text::kUpb11x8));
  CHECK(b8.lhs == 55);
  CHECK(b8.rhs == 55);
  CHECK(b8.holds);

  upb::PairBound bstd = upb::pair_bound(upb::detail::standard_basis(2));
  CHECK(bstd.lhs == 8);  // each column contributes 2x2
  CHECK(bstd.rhs == 6);
  CHECK(bstd.holds);
}

TEST_CASE("sigma-to-p feasibility sets") {
  CHECK(upb::sigma_p_feasible(2) == std::set<int>{12, 13, 14, 15, 16, 18});
  CHECK(upb::sigma_p_feasible(3) == std::set<int>{8, 9, 10, 11, 12, 14});
  CHECK(upb::sigma_p_feasible(4) == std::set<int>{7, 8, 9});
  CHECK(upb::sigma_p_feasible(5) == std::set<int>{6});
  for (int sigma = 2; sigma <= 5; ++sigma)
    CHECK(upb::sigma_p_feasible(sigma) == testutil::sigma_p_bruteforce(sigma, 11));
  CHECK_THROWS_AS(upb::sigma_p_feasible(1), upb::DomainError);
  CHECK_THROWS_AS(upb::sigma_p_feasible(6), upb::DomainError);
  CHECK_THROWS_AS(upb::sigma_p_feasible(3, 9), upb::DomainError);
}
