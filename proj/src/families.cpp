#include "opzd/families.hpp"

#include <array>
#include <stdexcept>

namespace opzd {

  namespace {
    void check_index(char const* name, std::size_t i, std::size_t lo, std::size_t hi) {
      if (i < lo || i > hi) {
        throw std::out_of_range(std::string(name) + " index " + std::to_string(i)
                                + " outside " + std::to_string(lo) + ".."
                                + std::to_string(hi));
      }
    }

    // Builds the map x -> f(x) on X_n.
    template <typename F>
    Transformation tabulate(std::size_t n, F&& f) {
      if (n == 0 || n > kMaxDegree) {
        throw std::invalid_argument("degree out of range: " + std::to_string(n));
      }
      std::vector<std::uint8_t> w(n);
      for (Point x = 1; x <= n; ++x) {
        w[x - 1] = static_cast<std::uint8_t>(f(x));
      }
      return from_raw(std::move(w));
    }

    constexpr std::array<std::pair<FamilyName, std::string_view>, 11> kFamilyIds{{
        {FamilyName::B, "b"},
        {FamilyName::C, "c"},
        {FamilyName::F, "f"},
        {FamilyName::H, "h"},
        {FamilyName::K, "k"},
        {FamilyName::M, "m"},
        {FamilyName::E_PLUS, "eplus"},
        {FamilyName::E_MINUS, "eminus"},
        {FamilyName::G, "g"},
        {FamilyName::D_LAYER_L1, "dlayer-l1"},
        {FamilyName::D_LAYER_LN, "dlayer-ln"},
    }};
  }  // namespace

  Transformation gamma(std::size_t n, std::size_t i) {
    check_index("gamma", i, 1, n - 1);
    return tabulate(n, [i](Point x) { return x <= i ? x : x - 1; });
  }

  Transformation beta(std::size_t n, std::size_t i) {
    check_index("beta", i, 1, n - 1);
    return tabulate(n, [i](Point x) { return x <= i ? x + 1 : x; });
  }

  Transformation xi(std::size_t n, std::size_t i) {
    check_index("xi", i, 2, n - 1);
    return tabulate(n, [n, i](Point x) -> Point {
      if (x == n) {
        return n - 1;
      }
      return x == i - 1 ? i : x;
    });
  }

  Transformation zeta(std::size_t n, std::size_t i) {
    check_index("zeta", i, 2, n - 1);
    return tabulate(n, [i](Point x) -> Point {
      if (x == 1) {
        return 2;
      }
      return x == i + 1 ? i : x;
    });
  }

  Transformation zeta_prime(std::size_t n, std::size_t i) {
    check_index("zeta'", i, 2, n - 2);
    return tabulate(n, [i](Point x) -> Point {
      if (x == 1) {
        return 1;
      }
      return x == i + 1 ? i - 1 : x - 1;
    });
  }

  Transformation lambda_(std::size_t n, std::size_t i) {
    check_index("lambda", i, 2, n);
    return tabulate(n, [i](Point x) -> Point {
      if (x == 1) {
        return 1;
      }
      return x <= i ? x - 1 : x;
    });
  }

  Transformation delta(std::size_t n, std::size_t i) {
    check_index("delta", i, 3, n - 1);
    return tabulate(n, [i](Point x) -> Point {
      if (x <= 2) {
        return 1;
      }
      return x == i ? i + 1 : x;
    });
  }

  Transformation mu(std::size_t n, std::size_t i) {
    check_index("mu", i, 3, n - 1);
    return tabulate(n, [i](Point x) -> Point {
      if (x <= 2) {
        return 1;
      }
      return x <= i ? x : x - 1;
    });
  }

  Transformation rho(std::size_t n, std::size_t i) {
    check_index("rho", i, 3, n - 2);
    return tabulate(n, [n, i](Point x) -> Point {
      if (x <= 2) {
        return 1;
      }
      if (x == n) {
        return n - 1;
      }
      return x == i ? i + 1 : x;
    });
  }

  Transformation tau(std::size_t n, std::size_t i) {
    check_index("tau", i, 3, n - 1);
    return tabulate(n, [n, i](Point x) -> Point {
      if (x <= 2) {
        return 1;
      }
      if (x == n) {
        return n - 1;
      }
      return x <= i ? x - 1 : x;
    });
  }

  Transformation rho_special(std::size_t n) {
    if (n < 5) {
      throw std::invalid_argument("rho needs n >= 5, got " + std::to_string(n));
    }
    return tabulate(n, [n](Point x) -> Point {
      if (x <= 2) {
        return 1;
      }
      return x <= n - 2 ? x + 1 : n - 1;
    });
  }

  Transformation shift_down(Transformation const& a) {
    std::size_t const n = a.degree();
    if (n < 3 || !is_order_preserving(a) || a(3) < 3) {
      throw std::invalid_argument("shift_down needs an order-preserving map with 3a >= 3: "
                                  + to_string(a));
    }
    return tabulate(n - 2, [&](Point x) { return a(x + 2) - 2; });
  }

  Transformation theta(std::size_t n, std::size_t i) {
    check_index("theta", i, 1, n - 1);
    return tabulate(n, [i](Point x) { return x == i ? i + 1 : x; });
  }

  Transformation remark_alpha(std::size_t n) {
    if (n < 5) {
      throw std::invalid_argument("remark factors need n >= 5, got " + std::to_string(n));
    }
    return tabulate(n, [n](Point x) -> Point {
      if (x <= 2) {
        return 1;
      }
      if (x == 3) {
        return 3;
      }
      return x <= n - 2 ? x + 1 : n - 1;
    });
  }

  Transformation remark_beta(std::size_t n) {
    if (n < 5) {
      throw std::invalid_argument("remark factors need n >= 5, got " + std::to_string(n));
    }
    return tabulate(n, [n](Point x) -> Point {
      if (x <= 2) {
        return 1;
      }
      if (x == 3) {
        return 4;
      }
      return x == n ? n - 1 : x;
    });
  }

  std::string_view family_id(FamilyName name) noexcept {
    for (auto const& [f, id] : kFamilyIds) {
      if (f == name) {
        return id;
      }
    }
    return "?";
  }

  std::optional<FamilyName> parse_family_id(std::string_view id) noexcept {
    for (auto const& [f, s] : kFamilyIds) {
      if (s == id) {
        return f;
      }
    }
    return std::nullopt;
  }

  std::vector<FamilyName> all_family_names() {
    std::vector<FamilyName> out;
    for (auto const& entry : kFamilyIds) {
      out.push_back(entry.first);
    }
    return out;
  }

  std::size_t family_min_degree(FamilyName name) noexcept {
    switch (name) {
      case FamilyName::B:
        return 4;
      case FamilyName::H:
      case FamilyName::K:
      case FamilyName::M:
        return 5;
      case FamilyName::G:
        return 2;
      default:
        return 3;
    }
  }

  GeneratorFamily family_G(std::size_t n) {
    if (n < 2) {
      throw std::invalid_argument("G_n needs n >= 2, got " + std::to_string(n));
    }
    GeneratorFamily g{FamilyName::G, n, {}};
    for (std::size_t i = 1; i <= n - 1; ++i) {
      g.elements.push_back(theta(n, i));
    }
    g.elements.push_back(lambda_(n, n));
    g.elements.push_back(identity(n));
    return g;
  }

  GeneratorFamily family(FamilyName name, std::size_t n) {
    if (n < family_min_degree(name)) {
      throw std::invalid_argument("family " + std::string(family_id(name)) + " needs n >= "
                                  + std::to_string(family_min_degree(name)) + ", got "
                                  + std::to_string(n));
    }
    GeneratorFamily f{name, n, {}};
    auto&           e = f.elements;
    switch (name) {
      case FamilyName::B:
        e.push_back(gamma(n, 1));
        for (std::size_t i = 2; i <= n - 1; ++i) {
          e.push_back(beta(n, i));
        }
        for (std::size_t i = 3; i <= n - 1; ++i) {
          e.push_back(xi(n, i));
        }
        break;
      case FamilyName::C:
        for (std::size_t i = 3; i <= n - 1; ++i) {
          e.push_back(delta(n, i));
        }
        break;
      case FamilyName::F:
        for (std::size_t i = 2; i <= n; ++i) {
          e.push_back(lambda_(n, i));
        }
        break;
      case FamilyName::H:
        for (std::size_t i = 3; i <= n - 1; ++i) {
          e.push_back(mu(n, i));
        }
        break;
      case FamilyName::K:
        for (std::size_t i = 3; i <= n - 2; ++i) {
          e.push_back(rho(n, i));
        }
        break;
      case FamilyName::M:
        for (std::size_t i = 3; i <= n - 1; ++i) {
          e.push_back(tau(n, i));
        }
        break;
      case FamilyName::E_PLUS:
        for (std::size_t i = 2; i <= n - 1; ++i) {
          e.push_back(xi(n, i));
        }
        break;
      case FamilyName::E_MINUS:
        for (std::size_t i = 2; i <= n - 1; ++i) {
          e.push_back(zeta(n, i));
        }
        break;
      case FamilyName::G:
        return family_G(n);
      case FamilyName::D_LAYER_L1:
        for (std::size_t i = 1; i <= n - 1; ++i) {
          e.push_back(gamma(n, i));
        }
        break;
      case FamilyName::D_LAYER_LN:
        for (std::size_t i = 1; i <= n - 1; ++i) {
          e.push_back(beta(n, i));
        }
        break;
    }
    return f;
  }

  std::optional<Transformation> left_witness(Transformation const& a, Point k) {
    std::size_t const n = a.degree();
    if (k < 1 || k > n) {
      throw std::out_of_range("k = " + std::to_string(k) + " outside 1.." + std::to_string(n));
    }
    if (!is_order_preserving(a)) {
      throw std::invalid_argument("left_witness needs an order-preserving map");
    }
    if (n == 1) {
      return std::nullopt;
    }
    bool const misses_1 = a.raw().front() != 1;
    bool const misses_n = a.raw().back() != n;
    if (misses_n && k < n) {
      // 1..n-1 -> k, n -> n
      return tabulate(n, [n, k](Point x) { return x == n ? n : k; });
    }
    if (misses_1 && k > 1) {
      // 1 -> 1, 2..n -> k
      return tabulate(n, [k](Point x) -> Point { return x == 1 ? 1 : k; });
    }
    return std::nullopt;
  }

  std::optional<Transformation> right_witness(Transformation const& a, Point k) {
    std::size_t const n = a.degree();
    if (k < 1 || k > n) {
      throw std::out_of_range("k = " + std::to_string(k) + " outside 1.." + std::to_string(n));
    }
    for (Point i = 1; i <= n; ++i) {
      if (i != k && a(i) == k) {
        return constant(n, i);
      }
    }
    return std::nullopt;
  }

}  // namespace opzd
