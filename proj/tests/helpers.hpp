#ifndef OPZD_TESTS_HELPERS_HPP_
#define OPZD_TESTS_HELPERS_HPP_

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "opzd/enumeration.hpp"
#include "opzd/transformation.hpp"

namespace opzd::test {

  inline Transformation T(std::string_view s) {
    return parse_transformation(s);
  }

  inline std::set<std::string> names(std::vector<Transformation> const& v) {
    std::set<std::string> out;
    for (auto const& t : v) {
      out.insert(to_string(t));
    }
    return out;
  }

  inline std::set<std::string> names(ElementStore const& s) {
    return names(s.elements());
  }

  // Pairwise fixpoint: multiply every pair until nothing new appears.
  inline std::set<Transformation> naive_closure(std::vector<Transformation> const& gens) {
    std::set<Transformation> s(gens.begin(), gens.end());
    while (true) {
      std::set<Transformation> next = s;
      for (auto const& a : s) {
        for (auto const& b : s) {
          next.insert(compose(a, b));
        }
      }
      if (next.size() == s.size()) {
        return s;
      }
      s = std::move(next);
    }
  }

  inline std::set<Transformation> as_set(ElementStore const& s) {
    return {s.begin(), s.end()};
  }

}  // namespace opzd::test

#endif  // OPZD_TESTS_HELPERS_HPP_
