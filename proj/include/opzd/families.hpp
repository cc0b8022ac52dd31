#ifndef OPZD_FAMILIES_HPP_
#define OPZD_FAMILIES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opzd/transformation.hpp"

// Named maps and generator families of O_n. Every constructor checks its
// index against the exact range it is defined on and throws
// std::out_of_range (bad index) or std::invalid_argument (n too small).

namespace opzd {

  // 1 <= i <= n-1. gamma_i = [1,..,i,i,i+1,..,n-1], beta_i = [2,..,i+1,i+1,..,n].
  Transformation gamma(std::size_t n, std::size_t i);
  Transformation beta(std::size_t n, std::size_t i);

  // 2 <= i <= n-1. The members of E+ and E-.
  Transformation xi(std::size_t n, std::size_t i);
  Transformation zeta(std::size_t n, std::size_t i);
  // 2 <= i <= n-2; zeta'_i with zeta'_i beta_{n-1} = zeta_i.
  Transformation zeta_prime(std::size_t n, std::size_t i);

  // 2 <= i <= n.
  Transformation lambda_(std::size_t n, std::size_t i);
  // 3 <= i <= n-1.
  Transformation delta(std::size_t n, std::size_t i);
  // 3 <= i <= n-1.
  Transformation mu(std::size_t n, std::size_t i);
  // 3 <= i <= n-2.
  Transformation rho(std::size_t n, std::size_t i);
  // 3 <= i <= n-1.
  Transformation tau(std::size_t n, std::size_t i);
  // n >= 5: [1,1,4,5,..,n-1,n-1,n-1].
  Transformation rho_special(std::size_t n);
  // 1 <= i <= n-1: the idempotent moving only i, to i+1.
  Transformation theta(std::size_t n, std::size_t i);

  // The two factors of rho_special from the closing remark, instantiated
  // literally at n >= 5: [1,1,3,5,..,n-1,n-1,n-1] and [1,1,4,4,5,..,n-1,n-1].
  Transformation remark_alpha(std::size_t n);
  Transformation remark_beta(std::size_t n);

  // x -> (x+2)a - 2 on X_{n-2}. Defined when 3a >= 3 and a is
  // order-preserving; throws std::invalid_argument otherwise.
  Transformation shift_down(Transformation const& a);

  enum class FamilyName {
    B,
    C,
    F,
    H,
    K,
    M,
    E_PLUS,
    E_MINUS,
    G,
    D_LAYER_L1,
    D_LAYER_LN
  };

  struct GeneratorFamily {
    FamilyName                  name;
    std::size_t                 degree;
    std::vector<Transformation> elements;
  };

  // Stable lowercase CLI identifiers: b, c, f, h, k, m, eplus, eminus, g,
  // dlayer-l1, dlayer-ln.
  std::string_view           family_id(FamilyName name) noexcept;
  std::optional<FamilyName>  parse_family_id(std::string_view id) noexcept;
  std::vector<FamilyName>    all_family_names();

  // Smallest n for which the family is defined.
  std::size_t family_min_degree(FamilyName name) noexcept;

  GeneratorFamily family(FamilyName name, std::size_t n);
  // {theta_1, .., theta_{n-1}, lambda_n, 1_n}, n >= 2.
  GeneratorFamily family_G(std::size_t n);

  // A beta != pi_k in O_n with a beta = pi_k, built from the explicit maps
  // used to characterize L_k; nullopt iff a is not in L_k. Requires a
  // order-preserving.
  std::optional<Transformation> left_witness(Transformation const& a, Point k);

  // pi_i for the least i != k with ia = k; nullopt iff a is not in R_k.
  std::optional<Transformation> right_witness(Transformation const& a, Point k);

}  // namespace opzd

#endif  // OPZD_FAMILIES_HPP_
