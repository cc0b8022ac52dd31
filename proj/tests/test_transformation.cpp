#include "doctest.h"
#include "helpers.hpp"

#include <random>

using namespace opzd;
using opzd::test::T;

TEST_CASE("construction validates entries and length") {
  int const ok[] = {1, 1, 2};
  auto      a    = make_transformation(3, ok);
  CHECK(a(1) == 1);
  CHECK(a(2) == 1);
  CHECK(a(3) == 2);
  int const big[] = {1, 1, 4};
  CHECK_THROWS_AS(make_transformation(3, big), std::invalid_argument);
  CHECK_THROWS_AS(make_transformation(4, ok), std::invalid_argument);
  CHECK_THROWS(parse_transformation("[1,0,2]"));
  CHECK_THROWS(parse_transformation("1,2"));
  CHECK(T("[1, 2 ,2]") == T("[1,2,2]"));
  CHECK(to_string(T("[3,1,2]")) == "[3,1,2]");
}

TEST_CASE("compose is left to right") {
  CHECK(compose(T("[1,1,2]"), T("[1,2,2]")) == T("[1,1,2]"));
  CHECK(compose(T("[1,1,2]"), T("[1,1,3]")) == T("[1,1,1]"));
  CHECK(compose(T("[2,3,1]"), T("[3,1,2]")) == T("[1,2,3]"));
  CHECK_THROWS_AS(compose(T("[1,1]"), T("[1,1,1]")), std::invalid_argument);
  std::vector<Transformation> word{T("[1,1,2]"), T("[1,1,3]"), T("[2,2,2]")};
  CHECK(compose_all(word) == T("[2,2,2]"));
}

TEST_CASE("identity and constants") {
  CHECK(constant(3, 2) == T("[2,2,2]"));
  CHECK(constant(1, 1) == T("[1]"));
  for_each_order_preserving(3, [](Transformation const& a) {
    CHECK(compose(a, identity(3)) == a);
    CHECK(compose(identity(3), a) == a);
  });
}

TEST_CASE("image, fix, kernel") {
  CHECK(image(T("[1,1,2]")) == std::vector<Point>{1, 2});
  CHECK(image(constant(5, 3)) == std::vector<Point>{3});
  CHECK(image(identity(4)) == std::vector<Point>{1, 2, 3, 4});
  CHECK(fix_set(T("[1,1,2]")) == std::vector<Point>{1});
  CHECK(fix_set(identity(4)) == std::vector<Point>{1, 2, 3, 4});
  CHECK(fix_set(T("[1,3,3,4]")) == std::vector<Point>{1, 3, 4});
  CHECK(kernel(T("[1,1,2]")) == OrderedPartition(3, {{1, 2}, {3}}));
  CHECK(kernel(identity(3)) == OrderedPartition(3, {{1}, {2}, {3}}));
  CHECK(kernel(T("[1,1,4,4,5]")) == OrderedPartition(5, {{1, 2}, {3, 4}, {5}}));
  CHECK(preimage(T("[1,1,2]"), 1) == std::vector<Point>{1, 2});
}

TEST_CASE("order predicates") {
  auto a = T("[1,1,2]");
  CHECK(is_order_preserving(a));
  CHECK(is_order_decreasing(a));
  CHECK_FALSE(is_order_increasing(a));
  CHECK_FALSE(is_order_preserving(T("[2,1,3]")));
  auto b = T("[2,2,3]");
  CHECK(is_order_preserving(b));
  CHECK_FALSE(is_order_decreasing(b));
  CHECK(is_order_increasing(b));
  CHECK(is_idempotent(T("[1,3,3,4]")));
  CHECK_FALSE(is_idempotent(T("[1,1,2]")));
}

TEST_CASE("dual") {
  CHECK(dual(T("[1,1,2]")) == T("[2,3,3]"));
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(dual(constant(n, 1)) == constant(n, n));
  }
}

TEST_CASE("partitions") {
  OrderedPartition p(5, {{3, 4}, {1, 2}, {5}});
  CHECK(p.is_convex());
  CHECK_FALSE(p.is_ordered());
  CHECK(p.block_of(4) == 0);
  CHECK(p == OrderedPartition(5, {{1, 2}, {3, 4}, {5}}));
  CHECK_FALSE(OrderedPartition(3, {{1, 3}, {2}}).is_convex());
  CHECK_THROWS_AS(OrderedPartition(3, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(OrderedPartition(3, {{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK(OrderedPartition(4, {{1}, {2}, {3, 4}}).refines(OrderedPartition(4, {{1, 2}, {3, 4}})));
  CHECK_FALSE(OrderedPartition(4, {{1, 2}, {3, 4}}).refines(OrderedPartition(4, {{1}, {2, 3, 4}})));
}

TEST_CASE("equivalence closure") {
  std::vector<std::pair<Point, Point>> pairs{{1, 2}, {3, 4}};
  CHECK(equivalence_closure(pairs, 5) == OrderedPartition(5, {{1, 2}, {3, 4}, {5}}));
  std::vector<std::pair<Point, Point>> one{{1, 2}};
  CHECK(equivalence_closure(one, 3) == kernel(T("[1,1,2]")));
  std::vector<std::pair<Point, Point>> chain{{1, 2}, {2, 3}};
  CHECK(equivalence_closure(chain, 4) == OrderedPartition(4, {{1, 2, 3}, {4}}));
  std::vector<std::pair<Point, Point>> bad{{1, 6}};
  CHECK_THROWS_AS(equivalence_closure(bad, 5), std::out_of_range);
}

TEST_CASE("tabular form") {
  auto t = tabular_form(T("[1,1,2]"));
  CHECK(t.blocks == OrderedPartition(3, {{1, 2}, {3}}));
  CHECK(t.values == std::vector<Point>{1, 2});
  auto c = tabular_form(constant(4, 2));
  CHECK(c.blocks.size() == 1);
  CHECK(c.values == std::vector<Point>{2});
  auto m = tabular_form(T("[1,1,3,3,4]"));
  CHECK(m.blocks == OrderedPartition(5, {{1, 2}, {3, 4}, {5}}));
  CHECK(m.values == std::vector<Point>{1, 3, 4});
  CHECK_THROWS_AS(tabular_form(T("[2,1,3]")), std::invalid_argument);
}

TEST_CASE("ordering is degree then lexicographic") {
  CHECK(T("[1,1,2]") < T("[1,2,1]"));
  CHECK(T("[2,2]") < T("[1,1,1]"));
}

// Properties

TEST_CASE("associativity") {
  auto all = all_order_preserving(3);
  std::vector<Transformation> full;
  // every self-map of X_3, not only the order-preserving ones
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c)
        full.push_back(make_transformation(3, std::vector<int>{a, b, c}));
  for (auto const& a : full)
    for (auto const& b : full)
      for (auto const& c : full)
        REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));

  std::mt19937 rng(7);
  auto         o6 = all_order_preserving(6);
  std::uniform_int_distribution<std::size_t> pick(0, o6.size() - 1);
  for (int i = 0; i < 2000; ++i) {
    auto const &a = o6[pick(rng)], &b = o6[pick(rng)], &c = o6[pick(rng)];
    REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("O_n laws, exhaustive for n <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto all = all_order_preserving(n);
    for (auto const& a : all) {
      REQUIRE(dual(dual(a)) == a);
      REQUIRE(is_order_preserving(dual(a)));
      for (Point k = 1; k <= n; ++k) {
        REQUIRE(compose(a, constant(n, k)) == constant(n, k));
      }
      for (auto const& b : all) {
        auto ab = compose(a, b);
        REQUIRE(is_order_preserving(ab));
        REQUIRE(dual(ab) == compose(dual(a), dual(b)));
        // kernel(a) refines kernel(ab)
        REQUIRE(kernel(a).refines(kernel(ab)));
      }
      auto t = tabular_form(a);
      REQUIRE(from_tabular_form(t) == a);
      REQUIRE(t.blocks.is_convex());
      REQUIRE(t.blocks.is_ordered());
      REQUIRE(std::is_sorted(t.values.begin(), t.values.end()));
      REQUIRE(std::adjacent_find(t.values.begin(), t.values.end()) == t.values.end());
      REQUIRE(t.blocks.size() == image_size(a));
    }
  }
}
