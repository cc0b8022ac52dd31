#ifndef OPZD_ENGINE_HPP_
#define OPZD_ENGINE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "opzd/enumeration.hpp"
#include "opzd/transformation.hpp"

namespace opzd {

  struct ClosureOptions {
    bool parallel = true;
  };

  // <A>: the smallest composition-closed set containing the generators.
  struct ClosureResult {
    static constexpr std::uint32_t kNoParent = UINT32_MAX;

    ElementStore                elements;
    std::vector<Transformation> generators;  // distinct, in input order
    std::size_t                 generator_count = 0;
    std::uint64_t               product_count   = 0;
    // elements[i] = elements[parent[i]] * generators[via[i]]; for a
    // generator parent is kNoParent and via is its generator index.
    std::vector<std::uint32_t> parent;
    std::vector<std::uint32_t> via;

    // Generator indices whose left-to-right product is elements[i].
    std::vector<std::size_t> word(std::size_t i) const;
  };

  // Breadth-first right multiplication by the generators until stable.
  // Throws std::invalid_argument on an empty input or mixed degrees.
  ClosureResult closure(std::span<Transformation const> generators, ClosureOptions opts = {});

  bool is_generating_set(std::span<Transformation const> generators, ElementStore const& target);

  struct SubsemigroupReport {
    bool closed = true;
    // Least (a, b) in insertion order with ab outside the set.
    std::optional<std::pair<Transformation, Transformation>> violation;
  };

  SubsemigroupReport check_subsemigroup(ElementStore const& s);
  bool               is_subsemigroup(ElementStore const& s);

  // Elements s with no factorization s = ab, a, b in S \ {s}. Throws
  // std::invalid_argument when S is not closed.
  ElementStore undecomposables(ElementStore const& s);

  struct SearchBudget {
    std::size_t   max_elements = 2000;         // larger sets get bounds only
    std::size_t   max_extra    = 8;            // generators beyond the mandatory ones
    std::uint64_t max_products = 100'000'000;  // per top-level search branch
  };

  struct RankCertificate {
    std::size_t                 rank = 0;
    std::vector<Transformation> witness;    // generating set of size rank
    std::vector<Transformation> mandatory;  // undecomposables, always in witness
    bool                        search_exhaustive = false;
    std::size_t                 lower_bound       = 0;
    std::size_t                 upper_bound       = 0;
    std::uint64_t               product_count     = 0;
    std::string                 note;
  };

  // Exact rank by branch-and-bound over S, or bounds when the budget runs
  // out. known_generators, when it generates S, tightens the upper bound in
  // the bounds-only case. Throws std::invalid_argument when S is empty or
  // not closed.
  RankCertificate rank_exact(ElementStore const& s, SearchBudget const& budget = {},
                             std::span<Transformation const> known_generators = {});

  struct IsomorphismReport {
    bool        ok = false;
    std::string reason;
    std::optional<std::pair<Transformation, Transformation>> counterexample;
  };

  using ElementMap = std::function<Transformation(Transformation const&)>;

  // Checks that map is a bijection S -> T with map(ab) = map(a)map(b).
  IsomorphismReport verify_isomorphism(ElementMap const& map, ElementStore const& s,
                                       ElementStore const& t);

}  // namespace opzd

#endif  // OPZD_ENGINE_HPP_
