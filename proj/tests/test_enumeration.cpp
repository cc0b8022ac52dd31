#include "doctest.h"
#include "helpers.hpp"

using namespace opzd;
using opzd::test::names;
using opzd::test::T;
using S = std::set<std::string>;

TEST_CASE("small enumerations") {
  CHECK(names(enumerate(SemigroupId::O(3)))
        == S{"[1,1,1]", "[1,1,2]", "[1,1,3]", "[1,2,2]", "[1,2,3]", "[1,3,3]", "[2,2,2]",
             "[2,2,3]", "[2,3,3]", "[3,3,3]"});
  CHECK(names(enumerate(SemigroupId::R(3, 1))) == S{"[1,1,1]", "[1,1,2]", "[1,1,3]"});
  auto io = enumerate(SemigroupId::IO(3));
  CHECK(io.size() == 8);
  CHECK_FALSE(io.contains(T("[1,1,3]")));
  CHECK_FALSE(io.contains(T("[1,3,3]")));
  CHECK(names(enumerate(SemigroupId::R(3, 2)))
        == S{"[1,1,2]", "[1,2,2]", "[2,2,2]", "[2,2,3]", "[2,3,3]"});
  CHECK(names(enumerate(SemigroupId::Z(3, 1))) == S{"[1,1,1]", "[1,1,2]"});
  // lexicographic order
  auto o = enumerate(SemigroupId::O(4));
  CHECK(std::is_sorted(o.begin(), o.end()));
  CHECK_THROWS_AS(enumerate(SemigroupId::O(13)), std::domain_error);
}

TEST_CASE("characterized predicates") {
  CHECK_FALSE(in_R(T("[1,2,3]"), 2));
  CHECK(in_L(T("[1,1,2]"), 1));
  CHECK(in_Z(T("[1,1,2]"), 1));
  CHECK_FALSE(in_Z(T("[1,1,3]"), 1));
  CHECK(in_R_definitional(constant(3, 1), 1));
  for (std::size_t n = 3; n <= 6; ++n)
    for (Point k = 2; k <= n - 1; ++k) CHECK_FALSE(in_L_definitional(identity(n), k));
  CHECK_THROWS_AS(in_L_definitional(identity(7), 2), std::domain_error);
  CHECK_THROWS(in_L(T("[2,1,3]"), 1));
  CHECK_THROWS(in_R(T("[1,1,2]"), 4));
}

TEST_CASE("characterized and definitional predicates agree, n <= 5") {
  std::size_t disagreements = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (auto const& a : all_order_preserving(n))
      for (Point k = 1; k <= n; ++k) {
        bool l = in_L_definitional(a, k), r = in_R_definitional(a, k);
        disagreements += (in_L(a, k) != l) + (in_R(a, k) != r) + (in_Z(a, k) != (l && r));
      }
  CHECK(disagreements == 0);
}

TEST_CASE("layers and captive sets") {
  auto r1 = enumerate(SemigroupId::R(3, 1));
  CHECK(names(layer(r1, 2)) == S{"[1,1,2]", "[1,1,3]"});
  auto z1 = enumerate(SemigroupId::Z(5, 1));
  CHECK(names(layer(z1, 4)) == S{"[1,1,2,3,4]"});
  for (std::size_t n = 1; n <= 5; ++n)
    CHECK(names(layer(enumerate(SemigroupId::O(n)), n)) == S{to_string(identity(n))});
  CHECK(captive_set({1, 2}, 3) == std::vector<Point>{1});
  CHECK(captive_set({1, 2, 3, 4, 5}, 5) == std::vector<Point>{1, 2, 3, 4, 5});
  CHECK(captive_set({2, 3, 4}, 5) == std::vector<Point>{3});
}

TEST_CASE("closed forms") {
  CHECK(card(SemigroupId::R(3, 2)) == 5);
  CHECK(card(SemigroupId::L(4, 2)) == 25);
  CHECK(card(SemigroupId::Z(3, 1)) == 2);
  CHECK(card(SemigroupId::O(8)) == 6435);
  CHECK(card(SemigroupId::O(40)) == binomial(79, 39));
  CHECK(binomial(79, 39).str() == "53753604366668088230810");
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(rank_formula(SemigroupId::L(3, 1)) == 3);
  CHECK(rank_formula(SemigroupId::Z(3, 1)) == 1);
  CHECK(rank_formula(SemigroupId::O_Y(3, {1, 2})) == 3);
  CHECK_THROWS_AS(rank_formula(SemigroupId::O(4)), std::domain_error);
}

TEST_CASE("enumerated sizes match frozen brute-force counts") {
  // (n, k, |L_k|, |R_k|, |Z_k|) from an independent definitional search.
  struct Row {
    std::size_t n, k, l, r, z;
  };
  Row const rows[] = {
      {2, 1, 1, 1, 1},       {2, 2, 1, 1, 1},       {3, 1, 4, 3, 2},       {3, 2, 7, 5, 5},
      {4, 1, 15, 10, 6},     {4, 2, 25, 17, 15},    {5, 1, 56, 35, 20},    {5, 2, 91, 60, 51},
      {5, 3, 91, 61, 50},    {6, 1, 210, 126, 70},  {6, 2, 336, 217, 181}, {6, 3, 336, 222, 178},
  };
  for (auto const& row : rows) {
    CAPTURE(row.n);
    CAPTURE(row.k);
    for (Point k : {row.k, row.n + 1 - row.k}) {
      CHECK(enumerate(SemigroupId::L(row.n, k)).size() == row.l);
      CHECK(enumerate(SemigroupId::R(row.n, k)).size() == row.r);
      CHECK(enumerate(SemigroupId::Z(row.n, k)).size() == row.z);
      CHECK(card(SemigroupId::L(row.n, k)) == row.l);
      CHECK(card(SemigroupId::R(row.n, k)) == row.r);
      CHECK(card(SemigroupId::Z(row.n, k)) == row.z);
    }
  }
}

TEST_CASE("count agreement, n = 2..7") {
  for (std::size_t n = 1; n <= 7; ++n) CHECK(enumerate(SemigroupId::O(n)).size() == card(SemigroupId::O(n)));
  for (std::size_t n = 2; n <= 7; ++n)
    for (Point k = 1; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(enumerate(SemigroupId::L(n, k)).size() == card(SemigroupId::L(n, k)));
      CHECK(enumerate(SemigroupId::R(n, k)).size() == card(SemigroupId::R(n, k)));
      CHECK(enumerate(SemigroupId::Z(n, k)).size() == card(SemigroupId::Z(n, k)));
    }
  CHECK(names(enumerate(SemigroupId::Z(2, 1))) == names(enumerate(SemigroupId::R(2, 1))));
}

TEST_CASE("labelled stores satisfy their predicate") {
  std::vector<SemigroupId> ids{SemigroupId::IO(5), SemigroupId::O_Y(5, {1, 3, 5}),
                               SemigroupId::R1_star(5), SemigroupId::Z1_star(5),
                               SemigroupId::L(5, 3)};
  for (auto const& id : ids) {
    auto s = enumerate(id);
    CHECK_FALSE(s.empty());
    for (auto const& a : s) CHECK(contains(id, a));
    std::size_t hits = 0;
    for (auto const& a : all_order_preserving(5)) hits += contains(id, a);
    CHECK(hits == s.size());
  }
}

TEST_CASE("element store") {
  ElementStore s(3, "x");
  CHECK(s.insert(T("[1,1,2]")));
  CHECK_FALSE(s.insert(T("[1,1,2]")));
  CHECK_THROWS_AS(s.insert(T("[1,1]")), std::invalid_argument);
  CHECK(s.index_of(T("[1,1,2]")) == 0u);
  CHECK_FALSE(s.contains(T("[1,2,2]")));
}

TEST_CASE("semigroup ids") {
  CHECK_THROWS(SemigroupId::L(3, 4).validate());
  CHECK_THROWS(SemigroupId::O_Y(3, {}).validate());
  CHECK(SemigroupId::L(4, 2).describe() == "L_2(n=4)");
  CHECK(parse_set_kind("z1star") == SetKind::Z1_STAR);
}
