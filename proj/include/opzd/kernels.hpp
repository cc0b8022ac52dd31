#ifndef OPZD_KERNELS_HPP_
#define OPZD_KERNELS_HPP_

// Data-parallel inner loops. Each kernel has a serial reference in
// opzd::kernels::serial and an OpenMP version in opzd::kernels::parallel
// with identical results; the parallel versions fall back to serial code
// when the library is built without OpenMP.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "opzd/enumeration.hpp"
#include "opzd/transformation.hpp"

namespace opzd::kernels {

  inline constexpr std::uint32_t kNotInSet = UINT32_MAX;

  // Cayley table of a finite set of transformations: cell (a, b) holds the
  // index of ab, or kNotInSet when ab leaves the set.
  struct ProductTable {
    std::size_t                size = 0;
    std::vector<std::uint32_t> cells;

    std::uint32_t operator()(std::size_t a, std::size_t b) const noexcept {
      return cells[a * size + b];
    }
  };

  struct PairScan {
    // decomposable[s] != 0 iff s = ab for some a, b != s in the set.
    std::vector<unsigned char> decomposable;
    // Lexicographically least (a, b) with ab outside the set.
    std::optional<std::pair<std::size_t, std::size_t>> violation;
  };

  using Predicate = std::function<bool(Transformation const&)>;

  bool openmp_enabled() noexcept;
  int  max_threads() noexcept;

  namespace serial {
    // flags[i] = pred(items[i]).
    std::vector<unsigned char> filter(std::span<Transformation const> items,
                                      Predicate const&                pred);
    ProductTable product_table(ElementStore const& s);
    PairScan     pair_scan(ElementStore const& s);
    std::optional<std::pair<std::size_t, std::size_t>> first_closure_violation(
        ElementStore const& s);
    // out[i * |gens| + j] = frontier[i] gens[j].
    std::vector<Transformation> right_products(std::span<Transformation const> frontier,
                                               std::span<Transformation const> gens);
  }  // namespace serial

  namespace parallel {
    std::vector<unsigned char> filter(std::span<Transformation const> items,
                                      Predicate const&                pred);
    ProductTable product_table(ElementStore const& s);
    PairScan     pair_scan(ElementStore const& s);
    std::optional<std::pair<std::size_t, std::size_t>> first_closure_violation(
        ElementStore const& s);
    std::vector<Transformation> right_products(std::span<Transformation const> frontier,
                                               std::span<Transformation const> gens);
  }  // namespace parallel

}  // namespace opzd::kernels

#endif  // OPZD_KERNELS_HPP_
