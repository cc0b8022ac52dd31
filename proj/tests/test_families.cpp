#include "doctest.h"
#include "helpers.hpp"

#include "opzd/families.hpp"

using namespace opzd;
using opzd::test::T;

TEST_CASE("constructors at fixed points") {
  CHECK(gamma(4, 2) == T("[1,2,2,3]"));
  CHECK(beta(4, 2) == T("[2,3,3,4]"));
  CHECK(gamma(3, 1) == T("[1,1,2]"));
  // tau_{n-1} has no valid index at n = 3; its display evaluates to [1,1,2]
  CHECK_THROWS_AS(tau(3, 2), std::out_of_range);
  CHECK(xi(4, 2) == T("[2,2,3,3]"));
  CHECK(zeta(4, 2) == T("[2,2,2,4]"));
  CHECK(xi(4, 3) == T("[1,3,3,3]"));
  CHECK(lambda_(4, 4) == T("[1,1,2,3]"));
  CHECK(delta(5, 3) == T("[1,1,4,4,5]"));
  CHECK(delta(6, 4) == T("[1,1,3,5,5,6]"));
  CHECK(mu(5, 3) == T("[1,1,3,3,4]"));
  CHECK(tau(5, 3) == T("[1,1,2,4,4]"));
  CHECK(rho_special(5) == T("[1,1,4,4,4]"));
  CHECK(theta(4, 2) == T("[1,3,3,4]"));
  CHECK(beta(3, 1) == T("[2,2,3]"));
}

TEST_CASE("index ranges are strict") {
  CHECK_THROWS_AS(gamma(4, 0), std::out_of_range);
  CHECK_THROWS_AS(gamma(4, 4), std::out_of_range);
  CHECK_THROWS_AS(xi(4, 1), std::out_of_range);
  CHECK_THROWS_AS(zeta_prime(5, 4), std::out_of_range);
  CHECK_THROWS_AS(lambda_(4, 1), std::out_of_range);
  CHECK_THROWS_AS(delta(5, 2), std::out_of_range);
  CHECK_THROWS_AS(delta(5, 5), std::out_of_range);
  CHECK_THROWS_AS(rho(6, 5), std::out_of_range);
  CHECK_THROWS_AS(tau(5, 5), std::out_of_range);
  CHECK_THROWS(rho_special(4));
}

TEST_CASE("family_G") {
  auto g = family_G(3);
  CHECK(test::names(g.elements)
        == std::set<std::string>{"[2,2,3]", "[1,3,3]", "[1,1,2]", "[1,2,3]"});
  for (std::size_t n = 2; n <= 6; ++n) {
    auto gn = family_G(n);
    CHECK(gn.elements.size() == n + 1);
    for (auto const& t : gn.elements) {
      CHECK(is_idempotent(t) == (n == 2 || t != lambda_(n, n)));
    }
  }
}

TEST_CASE("family sizes") {
  for (std::size_t n = 5; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(family(FamilyName::E_PLUS, n).elements.size() == n - 2);
    CHECK(family(FamilyName::E_MINUS, n).elements.size() == n - 2);
    CHECK(family(FamilyName::F, n).elements.size() == n - 1);
    CHECK(family(FamilyName::C, n).elements.size() == n - 3);
    CHECK(family(FamilyName::B, n).elements.size() == 2 * n - 4);
    CHECK(family(FamilyName::H, n).elements.size() == n - 3);
    CHECK(family(FamilyName::K, n).elements.size() == n - 4);
    CHECK(family(FamilyName::M, n).elements.size() == n - 3);
    CHECK(family(FamilyName::D_LAYER_L1, n).elements.size() == n - 1);
    CHECK(family(FamilyName::D_LAYER_LN, n).elements.size() == n - 1);
  }
  CHECK(family(FamilyName::C, 6).elements.size() + family(FamilyName::F, 6).elements.size() == 8);
  CHECK(family(FamilyName::H, 6).elements.size() + family(FamilyName::M, 6).elements.size() + 1
        == 7);
  CHECK_THROWS(family(FamilyName::H, 4));
}

TEST_CASE("family ids round trip") {
  for (auto f : all_family_names()) {
    CHECK(parse_family_id(family_id(f)) == f);
  }
  CHECK_FALSE(parse_family_id("zz").has_value());
}

TEST_CASE("family membership") {
  for (std::size_t n = 4; n <= 7; ++n) CHECK(tau(n, n - 1) == gamma(n, 1));
  for (std::size_t n = 5; n <= 7; ++n) {
    CAPTURE(n);
    for (auto const& t : family(FamilyName::B, n).elements) CHECK(in_L(t, 2));
    for (auto const& t : family(FamilyName::C, n).elements) CHECK(in_R(t, 1));
    for (auto const& t : family(FamilyName::F, n).elements) CHECK(in_R(t, 1));
    for (auto f : {FamilyName::H, FamilyName::K, FamilyName::M})
      for (auto const& t : family(f, n).elements) CHECK(in_Z(t, 1));
    for (auto const& t : family(FamilyName::E_PLUS, n).elements)
      for (Point k = 1; k <= n - 1; ++k) CHECK(in_L(t, k));
    for (auto const& t : family(FamilyName::E_MINUS, n).elements)
      for (Point k = 2; k <= n; ++k) CHECK(in_L(t, k));
  }
}

TEST_CASE("D-layer families match enumeration") {
  for (std::size_t n = 3; n <= 7; ++n) {
    CAPTURE(n);
    auto l1 = layer(enumerate(SemigroupId::L(n, 1)), n - 1);
    auto ln = layer(enumerate(SemigroupId::L(n, n)), n - 1);
    CHECK(test::names(l1) == test::names(family(FamilyName::D_LAYER_L1, n).elements));
    CHECK(test::names(ln) == test::names(family(FamilyName::D_LAYER_LN, n).elements));
  }
}

TEST_CASE("witness examples") {
  auto w = left_witness(T("[1,1,2]"), 1);
  REQUIRE(w);
  CHECK(*w == T("[1,1,3]"));
  CHECK_FALSE(left_witness(identity(3), 2));
  CHECK(left_witness(constant(3, 1), 1));
  CHECK(right_witness(T("[1,1,2]"), 1) == T("[2,2,2]"));
  CHECK_FALSE(right_witness(identity(3), 2));
  CHECK(right_witness(constant(4, 3), 3) == constant(4, 1));
}

TEST_CASE("witness soundness and completeness, n <= 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& a : all_order_preserving(n)) {
      for (Point k = 1; k <= n; ++k) {
        auto l = left_witness(a, k);
        auto r = right_witness(a, k);
        if (l) {
          REQUIRE(compose(a, *l) == constant(n, k));
          REQUIRE(*l != constant(n, k));
        }
        if (r) {
          REQUIRE(compose(*r, a) == constant(n, k));
          REQUIRE(*r != constant(n, k));
        }
        REQUIRE(l.has_value() == in_L_definitional(a, k));
        REQUIRE(r.has_value() == in_R_definitional(a, k));
      }
    }
  }
}
