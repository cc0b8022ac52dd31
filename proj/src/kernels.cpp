#include "opzd/kernels.hpp"

#include <atomic>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace opzd::kernels {

  bool openmp_enabled() noexcept {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
  }

  int max_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
  }

  namespace {
    using Pair = std::pair<std::size_t, std::size_t>;

    std::uint32_t lookup(ElementStore const& s, Transformation const& t) {
      auto i = s.index_of(t);
      return i ? static_cast<std::uint32_t>(*i) : kNotInSet;
    }

    // First b with s[a] s[b] outside s, scanning row a.
    std::optional<std::size_t> row_violation(ElementStore const& s, std::size_t a) {
      for (std::size_t b = 0; b < s.size(); ++b) {
        if (!s.contains(compose(s[a], s[b]))) {
          return b;
        }
      }
      return std::nullopt;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////////
  // serial
  ////////////////////////////////////////////////////////////////////////////

  namespace serial {

    std::vector<unsigned char> filter(std::span<Transformation const> items,
                                      Predicate const&                pred) {
      std::vector<unsigned char> flags(items.size());
      for (std::size_t i = 0; i < items.size(); ++i) {
        flags[i] = pred(items[i]) ? 1 : 0;
      }
      return flags;
    }

    ProductTable product_table(ElementStore const& s) {
      s.ensure_index();
      std::size_t const N = s.size();
      ProductTable      table{N, std::vector<std::uint32_t>(N * N)};
      for (std::size_t a = 0; a < N; ++a) {
        for (std::size_t b = 0; b < N; ++b) {
          table.cells[a * N + b] = lookup(s, compose(s[a], s[b]));
        }
      }
      return table;
    }

    PairScan pair_scan(ElementStore const& s) {
      s.ensure_index();
      std::size_t const N = s.size();
      PairScan          out{std::vector<unsigned char>(N, 0), std::nullopt};
      for (std::size_t a = 0; a < N; ++a) {
        for (std::size_t b = 0; b < N; ++b) {
          auto p = lookup(s, compose(s[a], s[b]));
          if (p == kNotInSet) {
            if (!out.violation) {
              out.violation = Pair{a, b};
            }
          } else if (p != a && p != b) {
            out.decomposable[p] = 1;
          }
        }
      }
      return out;
    }

    std::optional<Pair> first_closure_violation(ElementStore const& s) {
      s.ensure_index();
      for (std::size_t a = 0; a < s.size(); ++a) {
        if (auto b = row_violation(s, a)) {
          return Pair{a, *b};
        }
      }
      return std::nullopt;
    }

    std::vector<Transformation> right_products(std::span<Transformation const> frontier,
                                               std::span<Transformation const> gens) {
      std::vector<Transformation> out(frontier.size() * gens.size());
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        for (std::size_t j = 0; j < gens.size(); ++j) {
          out[i * gens.size() + j] = compose(frontier[i], gens[j]);
        }
      }
      return out;
    }

  }  // namespace serial

  ////////////////////////////////////////////////////////////////////////////
  // parallel
  ////////////////////////////////////////////////////////////////////////////

  namespace parallel {

    std::vector<unsigned char> filter(std::span<Transformation const> items,
                                      Predicate const&                pred) {
      std::vector<unsigned char> flags(items.size());
      auto const                 N = static_cast<std::int64_t>(items.size());
#pragma omp parallel for schedule(static)
      for (std::int64_t i = 0; i < N; ++i) {
        flags[i] = pred(items[i]) ? 1 : 0;
      }
      return flags;
    }

    ProductTable product_table(ElementStore const& s) {
      s.ensure_index();
      std::size_t const N = s.size();
      ProductTable      table{N, std::vector<std::uint32_t>(N * N)};
      auto const        rows = static_cast<std::int64_t>(N);
#pragma omp parallel for schedule(dynamic, 16)
      for (std::int64_t a = 0; a < rows; ++a) {
        for (std::size_t b = 0; b < N; ++b) {
          table.cells[a * N + b] = lookup(s, compose(s[a], s[b]));
        }
      }
      return table;
    }

    PairScan pair_scan(ElementStore const& s) {
      s.ensure_index();
      std::size_t const          N = s.size();
      std::vector<unsigned char> flags(N, 0);
      std::vector<std::size_t>   first_bad(N, SIZE_MAX);
      auto const                 rows = static_cast<std::int64_t>(N);
#pragma omp parallel for schedule(dynamic, 16)
      for (std::int64_t a = 0; a < rows; ++a) {
        for (std::size_t b = 0; b < N; ++b) {
          auto p = lookup(s, compose(s[a], s[b]));
          if (p == kNotInSet) {
            if (first_bad[a] == SIZE_MAX) {
              first_bad[a] = b;
            }
          } else if (p != static_cast<std::size_t>(a) && p != b) {
#pragma omp atomic write
            flags[p] = 1;
          }
        }
      }
      PairScan out{std::move(flags), std::nullopt};
      for (std::size_t a = 0; a < N; ++a) {
        if (first_bad[a] != SIZE_MAX) {
          out.violation = Pair{a, first_bad[a]};
          break;
        }
      }
      return out;
    }

    std::optional<Pair> first_closure_violation(ElementStore const& s) {
      s.ensure_index();
      std::size_t const        N = s.size();
      std::atomic<std::size_t> best_row{SIZE_MAX};
      std::vector<std::size_t> first_bad(N, SIZE_MAX);
      auto const               rows = static_cast<std::int64_t>(N);
#pragma omp parallel for schedule(dynamic, 8)
      for (std::int64_t a = 0; a < rows; ++a) {
        // Rows past a known violation cannot hold the least one.
        if (static_cast<std::size_t>(a) > best_row.load(std::memory_order_relaxed)) {
          continue;
        }
        if (auto b = row_violation(s, a)) {
          first_bad[a] = *b;
          auto cur     = best_row.load(std::memory_order_relaxed);
          while (static_cast<std::size_t>(a) < cur
                 && !best_row.compare_exchange_weak(cur, static_cast<std::size_t>(a))) {
          }
        }
      }
      auto a = best_row.load();
      if (a == SIZE_MAX) {
        return std::nullopt;
      }
      return Pair{a, first_bad[a]};
    }

    std::vector<Transformation> right_products(std::span<Transformation const> frontier,
                                               std::span<Transformation const> gens) {
      std::vector<Transformation> out(frontier.size() * gens.size());
      auto const                  rows = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel for schedule(static)
      for (std::int64_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < gens.size(); ++j) {
          out[i * gens.size() + j] = compose(frontier[i], gens[j]);
        }
      }
      return out;
    }

  }  // namespace parallel

}  // namespace opzd::kernels
