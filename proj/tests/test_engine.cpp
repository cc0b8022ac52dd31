#include "doctest.h"
#include "helpers.hpp"

#include <random>

#include "opzd/engine.hpp"
#include "opzd/families.hpp"

using namespace opzd;
using opzd::test::names;
using opzd::test::T;
using S = std::set<std::string>;

namespace {
  // Smallest generating subset by trying every subset in size order.
  std::size_t subset_rank(ElementStore const& s) {
    auto target = test::as_set(s);
    auto const N = s.size();
    for (std::size_t r = 1; r <= N; ++r) {
      std::vector<bool> mask(N, false);
      std::fill(mask.begin(), mask.begin() + r, true);
      do {
        std::vector<Transformation> gens;
        for (std::size_t i = 0; i < N; ++i)
          if (mask[i]) gens.push_back(s[i]);
        if (test::naive_closure(gens) == target) return r;
      } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    return N;
  }

  std::vector<Transformation> family_union(std::initializer_list<FamilyName> fs, std::size_t n) {
    std::vector<Transformation> out;
    for (auto f : fs) {
      auto e = family(f, n).elements;
      out.insert(out.end(), e.begin(), e.end());
    }
    return out;
  }
}  // namespace

TEST_CASE("closure examples") {
  std::vector<Transformation> g{T("[1,1,2]"), T("[1,1,3]")};
  auto c = closure(g);
  CHECK(names(c.elements) == S{"[1,1,2]", "[1,1,3]", "[1,1,1]"});
  CHECK(c.generator_count == 2);
  std::vector<Transformation> pk{constant(4, 2)};
  CHECK(closure(pk).elements.size() == 1);
  for (std::size_t n = 2; n <= 5; ++n) {
    CHECK(closure(family_G(n).elements).elements.same_set(enumerate(SemigroupId::O(n))));
  }
  CHECK_THROWS_AS(closure(std::vector<Transformation>{}), std::invalid_argument);
  std::vector<Transformation> mixed{T("[1,1]"), T("[1,1,1]")};
  CHECK_THROWS_AS(closure(mixed), std::invalid_argument);
}

TEST_CASE("closure properties") {
  std::mt19937 rng(11);
  for (std::size_t n = 2; n <= 5; ++n) {
    auto o = all_order_preserving(n);
    std::uniform_int_distribution<std::size_t> pick(0, o.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Transformation> g;
      std::size_t                 m = 1 + trial % 4;
      for (std::size_t i = 0; i < m; ++i) g.push_back(o[pick(rng)]);
      auto c = closure(g);
      // word witnesses multiply out
      for (std::size_t i = 0; i < c.elements.size(); ++i) {
        std::vector<Transformation> w;
        for (auto j : c.word(i)) w.push_back(c.generators[j]);
        REQUIRE(compose_all(w) == c.elements[i]);
      }
      // agrees with a pairwise fixpoint for n <= 4, and is closed
      if (n <= 4) REQUIRE(test::as_set(c.elements) == test::naive_closure(g));
      REQUIRE(is_subsemigroup(c.elements));
      // idempotence
      REQUIRE(closure(c.elements.elements()).elements.same_set(c.elements));
      // monotonicity
      auto h = g;
      h.push_back(o[pick(rng)]);
      REQUIRE(c.elements.subset_of(closure(h).elements));
      // serial path gives the same ordered result
      auto s = closure(g, ClosureOptions{false});
      REQUIRE(s.elements.elements() == c.elements.elements());
      REQUIRE(s.parent == c.parent);
    }
  }
}

TEST_CASE("generating sets") {
  CHECK(is_generating_set(family(FamilyName::B, 5).elements, enumerate(SemigroupId::L(5, 2))));
  CHECK(is_generating_set(std::vector{T("[1,1,2]")}, enumerate(SemigroupId::Z(3, 1))));
  auto f4 = family(FamilyName::F, 4).elements;
  CHECK_FALSE(is_generating_set(f4, enumerate(SemigroupId::R(4, 1))));
  CHECK(closure(f4).elements.size() == 7);
}

TEST_CASE("undecomposables") {
  CHECK(names(undecomposables(enumerate(SemigroupId::R(3, 1)))) == S{"[1,1,2]", "[1,1,3]"});
  CHECK(names(undecomposables(enumerate(SemigroupId::L(3, 1))))
        == S{"[1,1,2]", "[1,2,2]", "[2,2,2]"});
  for (std::size_t n = 5; n <= 6; ++n) {
    auto u = undecomposables(enumerate(SemigroupId::Z(n, 1)));
    for (auto const& m : family(FamilyName::M, n).elements) CHECK(u.contains(m));
  }
  CHECK_THROWS_AS(undecomposables(enumerate(SemigroupId::R(4, 2))), std::invalid_argument);
}

TEST_CASE("subsemigroup checks") {
  auto r42 = check_subsemigroup(enumerate(SemigroupId::R(4, 2)));
  CHECK_FALSE(r42.closed);
  REQUIRE(r42.violation);
  CHECK(r42.violation->first == T("[1,1,1,2]"));
  CHECK(is_subsemigroup(enumerate(SemigroupId::R(4, 1))));
  CHECK(is_subsemigroup(enumerate(SemigroupId::L(4, 2))));
}

TEST_CASE("rank examples") {
  auto r1 = rank_exact(enumerate(SemigroupId::R(3, 1)));
  CHECK(r1.rank == 2);
  CHECK(r1.search_exhaustive);
  CHECK(names(r1.witness) == S{"[1,1,2]", "[1,1,3]"});
  auto z1 = rank_exact(enumerate(SemigroupId::Z(3, 1)));
  CHECK(z1.rank == 1);
  CHECK(names(z1.witness) == S{"[1,1,2]"});
  auto l1 = rank_exact(enumerate(SemigroupId::L(3, 1)));
  CHECK(l1.rank == 3);
  CHECK(names(l1.witness) == S{"[1,1,2]", "[1,2,2]", "[2,2,2]"});
  CHECK_THROWS_AS(rank_exact(enumerate(SemigroupId::R(4, 2))), std::invalid_argument);
  CHECK_THROWS_AS(rank_exact(ElementStore(3)), std::invalid_argument);
}

TEST_CASE("rank of O_n equals |G_n| for n = 2..4") {
  // brute-force subset search gives 3 and 4 at n = 2, 3
  CHECK(rank_exact(enumerate(SemigroupId::O(2))).rank == 3);
  CHECK(rank_exact(enumerate(SemigroupId::O(3))).rank == 4);
  CHECK(rank_exact(enumerate(SemigroupId::O(4))).rank == 5);
}

TEST_CASE("rank agrees with subset search on small semigroups") {
  std::vector<SemigroupId> ids{SemigroupId::R(4, 1), SemigroupId::Z(4, 1), SemigroupId::L(3, 2),
                               SemigroupId::L(4, 1), SemigroupId::O(3), SemigroupId::IO(4),
                               SemigroupId::O_Y(4, {1, 2, 4})};
  for (auto const& id : ids) {
    CAPTURE(id.describe());
    auto s    = enumerate(id);
    auto cert = rank_exact(s);
    CHECK(cert.search_exhaustive);
    CHECK(cert.rank == subset_rank(s));
    CHECK(cert.witness.size() == cert.rank);
    CHECK(is_generating_set(cert.witness, s));
    CHECK(cert.lower_bound == cert.rank);
    CHECK(cert.upper_bound == cert.rank);
    auto w = test::as_set(ElementStore(s.degree(), cert.witness));
    for (auto const& m : cert.mandatory) CHECK(w.count(m) == 1);
  }
}

TEST_CASE("rank witness is deterministic") {
  auto s = enumerate(SemigroupId::Z(5, 1));
  auto a = rank_exact(s);
  auto b = rank_exact(s);
  CHECK(a.witness == b.witness);
  CHECK(a.rank == 5);
}

TEST_CASE("rank falls back to bounds") {
  auto           s = enumerate(SemigroupId::L(5, 2));
  SearchBudget   tiny{10, 8, 1000};
  auto           b = family(FamilyName::B, 5).elements;
  auto           cert = rank_exact(s, tiny, b);
  CHECK_FALSE(cert.search_exhaustive);
  CHECK(cert.upper_bound == b.size());
  CHECK(cert.lower_bound <= cert.upper_bound);
  CHECK(cert.lower_bound >= cert.mandatory.size());
  CHECK(is_generating_set(cert.witness, s));

  SearchBudget starved{2000, 8, 5};
  auto         c = rank_exact(enumerate(SemigroupId::R(5, 1)), starved);
  CHECK_FALSE(c.search_exhaustive);
  CHECK(c.lower_bound <= 6);
  CHECK_FALSE(c.note.empty());
}

TEST_CASE("undecomposables lie in every known generating set") {
  struct Case {
    SemigroupId                 id;
    std::vector<Transformation> gens;
  };
  std::vector<Case> cases;
  for (std::size_t n = 5; n <= 6; ++n) {
    cases.push_back({SemigroupId::L(n, 2), family(FamilyName::B, n).elements});
    cases.push_back({SemigroupId::R(n, 1), family_union({FamilyName::C, FamilyName::F}, n)});
    cases.push_back(
        {SemigroupId::Z(n, 1), family_union({FamilyName::H, FamilyName::K, FamilyName::M}, n)});
    cases.push_back({SemigroupId::O(n), family_G(n).elements});
  }
  for (auto const& c : cases) {
    CAPTURE(c.id.describe());
    auto s = enumerate(c.id);
    REQUIRE(is_generating_set(c.gens, s));
    auto g = test::as_set(ElementStore(s.degree(), c.gens));
    for (auto const& u : undecomposables(s)) CHECK(g.count(u) == 1);
  }
}

TEST_CASE("isomorphisms") {
  for (std::size_t n = 3; n <= 6; ++n) {
    auto r = verify_isomorphism([](Transformation const& a) { return dual(a); },
                                enumerate(SemigroupId::R(n, 1)), enumerate(SemigroupId::R(n, n)));
    CHECK(r.ok);
  }
  for (std::size_t n = 4; n <= 6; ++n) {
    auto r = verify_isomorphism([](Transformation const& a) { return shift_down(a); },
                                enumerate(SemigroupId::R1_star(n)), enumerate(SemigroupId::O(n - 2)));
    CHECK(r.ok);
  }
  // swap two elements: bijective, not multiplicative
  auto s = enumerate(SemigroupId::R(4, 1));
  auto x = s[0], y = s[3];
  auto swap = [&](Transformation const& a) { return a == x ? y : a == y ? x : a; };
  auto bad  = verify_isomorphism(swap, s, s);
  CHECK_FALSE(bad.ok);
  CHECK(bad.counterexample.has_value());
  auto notonto = verify_isomorphism([](Transformation const& a) { return a; },
                                    enumerate(SemigroupId::Z(4, 1)), enumerate(SemigroupId::R(4, 1)));
  CHECK_FALSE(notonto.ok);
}
