#include "opzd/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

#include "opzd/kernels.hpp"

namespace opzd {

  ////////////////////////////////////////////////////////////////////////////
  // ElementStore
  ////////////////////////////////////////////////////////////////////////////

  ElementStore::ElementStore(std::size_t n, std::string label)
      : degree_(n), label_(std::move(label)) {}

  ElementStore::ElementStore(std::size_t n, std::vector<Transformation> const& elements,
                             std::string label)
      : ElementStore(n, std::move(label)) {
    for (auto const& t : elements) {
      insert(t);
    }
  }

  ElementStore ElementStore::from_distinct(std::size_t n, std::vector<Transformation> elements,
                                           std::string label) {
    ElementStore s(n, std::move(label));
    s.elements_ = std::move(elements);
    s.indexed_  = false;
    return s;
  }

  void ElementStore::ensure_index() const {
    if (indexed_) {
      return;
    }
    index_.clear();
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      index_.emplace(elements_[i], i);
    }
    indexed_ = true;
  }

  bool ElementStore::insert(Transformation const& t) {
    if (t.degree() != degree_) {
      throw std::invalid_argument("store of degree " + std::to_string(degree_)
                                  + " cannot hold " + to_string(t));
    }
    ensure_index();
    auto [it, fresh] = index_.emplace(t, elements_.size());
    if (fresh) {
      elements_.push_back(t);
    }
    return fresh;
  }

  bool ElementStore::contains(Transformation const& t) const {
    ensure_index();
    return index_.count(t) != 0;
  }

  std::optional<std::size_t> ElementStore::index_of(Transformation const& t) const {
    ensure_index();
    auto it = index_.find(t);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  bool ElementStore::same_set(ElementStore const& other) const {
    return degree_ == other.degree_ && size() == other.size() && subset_of(other);
  }

  bool ElementStore::subset_of(ElementStore const& other) const {
    return std::all_of(elements_.begin(), elements_.end(),
                       [&](Transformation const& t) { return other.contains(t); });
  }

  ////////////////////////////////////////////////////////////////////////////
  // SemigroupId
  ////////////////////////////////////////////////////////////////////////////

  SemigroupId SemigroupId::O(std::size_t n) {
    return {SetKind::O, n, 0, {}};
  }
  SemigroupId SemigroupId::IO(std::size_t n) {
    return {SetKind::IO, n, 0, {}};
  }
  SemigroupId SemigroupId::O_Y(std::size_t n, std::vector<Point> y) {
    std::sort(y.begin(), y.end());
    y.erase(std::unique(y.begin(), y.end()), y.end());
    return {SetKind::O_Y, n, 0, std::move(y)};
  }
  SemigroupId SemigroupId::L(std::size_t n, Point k) {
    return {SetKind::L, n, k, {}};
  }
  SemigroupId SemigroupId::R(std::size_t n, Point k) {
    return {SetKind::R, n, k, {}};
  }
  SemigroupId SemigroupId::Z(std::size_t n, Point k) {
    return {SetKind::Z, n, k, {}};
  }
  SemigroupId SemigroupId::R1_star(std::size_t n) {
    return {SetKind::R1_STAR, n, 0, {}};
  }
  SemigroupId SemigroupId::Z1_star(std::size_t n) {
    return {SetKind::Z1_STAR, n, 0, {}};
  }

  void SemigroupId::validate() const {
    if (n == 0 || n > kMaxDegree) {
      throw std::invalid_argument("degree out of range: " + std::to_string(n));
    }
    switch (kind) {
      case SetKind::L:
      case SetKind::R:
      case SetKind::Z:
        if (k < 1 || k > n) {
          throw std::out_of_range("k = " + std::to_string(k) + " outside 1.."
                                  + std::to_string(n));
        }
        break;
      case SetKind::O_Y:
        if (y.empty()) {
          throw std::invalid_argument("O_n(Y) needs a nonempty Y");
        }
        for (auto p : y) {
          if (p < 1 || p > n) {
            throw std::out_of_range("Y contains " + std::to_string(p) + ", outside 1.."
                                    + std::to_string(n));
          }
        }
        break;
      case SetKind::R1_STAR:
      case SetKind::Z1_STAR:
        if (n < 3) {
          throw std::invalid_argument(cli_name() + " needs n >= 3");
        }
        break;
      default:
        break;
    }
  }

  std::string SemigroupId::cli_name() const {
    switch (kind) {
      case SetKind::O:
        return "on";
      case SetKind::IO:
        return "ion";
      case SetKind::O_Y:
        return "ony";
      case SetKind::L:
        return "l";
      case SetKind::R:
        return "r";
      case SetKind::Z:
        return "z";
      case SetKind::R1_STAR:
        return "r1star";
      case SetKind::Z1_STAR:
        return "z1star";
    }
    return "?";
  }

  std::string SemigroupId::describe() const {
    std::string const sn = "(n=" + std::to_string(n) + ")";
    switch (kind) {
      case SetKind::O:
        return "O" + sn;
      case SetKind::IO:
        return "IO" + sn;
      case SetKind::O_Y: {
        std::string s = "O(Y={";
        for (std::size_t i = 0; i < y.size(); ++i) {
          s += (i ? "," : "") + std::to_string(y[i]);
        }
        return s + "})" + sn;
      }
      case SetKind::L:
        return "L_" + std::to_string(k) + sn;
      case SetKind::R:
        return "R_" + std::to_string(k) + sn;
      case SetKind::Z:
        return "Z_" + std::to_string(k) + sn;
      case SetKind::R1_STAR:
        return "R_1*" + sn;
      case SetKind::Z1_STAR:
        return "Z_1*" + sn;
    }
    return "?";
  }

  std::optional<SetKind> parse_set_kind(std::string const& id) noexcept {
    if (id == "on") return SetKind::O;
    if (id == "ion") return SetKind::IO;
    if (id == "ony") return SetKind::O_Y;
    if (id == "l") return SetKind::L;
    if (id == "r") return SetKind::R;
    if (id == "z") return SetKind::Z;
    if (id == "r1star") return SetKind::R1_STAR;
    if (id == "z1star") return SetKind::Z1_STAR;
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Membership
  ////////////////////////////////////////////////////////////////////////////

  namespace {
    void check_member_args(Transformation const& a, Point k) {
      if (k < 1 || k > a.degree()) {
        throw std::out_of_range("k = " + std::to_string(k) + " outside 1.."
                                + std::to_string(a.degree()));
      }
      if (!is_order_preserving(a)) {
        throw std::invalid_argument(to_string(a) + " is not order-preserving");
      }
    }

    void check_definitional_cap(std::size_t n, std::size_t cap) {
      if (n > cap) {
        throw std::domain_error("definitional search capped at n = " + std::to_string(cap)
                                + ", got n = " + std::to_string(n));
      }
    }

    bool image_is_interval(Transformation const& a) {
      // Order-preserving maps step through their image in increasing order.
      auto w = a.raw();
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] > w[i - 1] + 1) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  bool in_L(Transformation const& a, Point k) {
    check_member_args(a, k);
    std::size_t const n        = a.degree();
    bool const        misses_1 = a.raw().front() != 1;
    bool const        misses_n = a.raw().back() != n;
    if (k == 1 && k == n) {
      return false;
    }
    if (k == 1) {
      return misses_n;
    }
    if (k == n) {
      return misses_1;
    }
    return misses_1 || misses_n;
  }

  bool in_R(Transformation const& a, Point k) {
    check_member_args(a, k);
    bool        hit   = false;
    bool        other = false;
    for (Point x = 1; x <= a.degree(); ++x) {
      if (a(x) == k) {
        hit = true;
        other |= (x != k);
      }
    }
    return hit && other;
  }

  bool in_Z(Transformation const& a, Point k) {
    return in_L(a, k) && in_R(a, k);
  }

  bool in_L_definitional(Transformation const& a, Point k, std::size_t cap) {
    check_member_args(a, k);
    check_definitional_cap(a.degree(), cap);
    auto const pk    = constant(a.degree(), k);
    bool       found = false;
    for_each_order_preserving(a.degree(), [&](Transformation const& b) {
      if (!found && b != pk && compose(a, b) == pk) {
        found = true;
      }
    });
    return found;
  }

  bool in_R_definitional(Transformation const& a, Point k, std::size_t cap) {
    check_member_args(a, k);
    check_definitional_cap(a.degree(), cap);
    auto const pk    = constant(a.degree(), k);
    bool       found = false;
    for_each_order_preserving(a.degree(), [&](Transformation const& g) {
      if (!found && g != pk && compose(g, a) == pk) {
        found = true;
      }
    });
    return found;
  }

  bool contains(SemigroupId const& id, Transformation const& a) {
    if (a.degree() != id.n || !is_order_preserving(a)) {
      return false;
    }
    switch (id.kind) {
      case SetKind::O:
        return true;
      case SetKind::IO:
        return image_is_interval(a);
      case SetKind::O_Y:
        return std::all_of(a.raw().begin(), a.raw().end(), [&](std::uint8_t v) {
          return std::binary_search(id.y.begin(), id.y.end(), Point{v});
        });
      case SetKind::L:
        return in_L(a, id.k);
      case SetKind::R:
        return in_R(a, id.k);
      case SetKind::Z:
        return in_Z(a, id.k);
      case SetKind::R1_STAR:
        return in_R(a, 1) && a(3) >= 3;
      case SetKind::Z1_STAR:
        return in_Z(a, 1) && a(3) >= 3;
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////////

  void for_each_order_preserving(std::size_t n,
                                 std::function<void(Transformation const&)> const& f) {
    if (n == 0 || n > kMaxDegree) {
      throw std::invalid_argument("degree out of range: " + std::to_string(n));
    }
    std::vector<std::uint8_t> w(n, 1);
    while (true) {
      f(from_raw(w));
      // Successor of a nondecreasing word in lexicographic order.
      std::size_t i = n;
      while (i > 0 && w[i - 1] == n) {
        --i;
      }
      if (i == 0) {
        return;
      }
      std::uint8_t v = w[i - 1] + 1;
      std::fill(w.begin() + static_cast<std::ptrdiff_t>(i - 1), w.end(), v);
    }
  }

  std::vector<Transformation> all_order_preserving(std::size_t n) {
    std::vector<Transformation> out;
    for_each_order_preserving(n, [&](Transformation const& t) { out.push_back(t); });
    return out;
  }

  ElementStore enumerate(SemigroupId const& id, std::size_t cap) {
    id.validate();
    if (id.n > cap) {
      throw std::domain_error("enumeration capped at n = " + std::to_string(cap)
                              + ", got n = " + std::to_string(id.n));
    }
    auto all = all_order_preserving(id.n);
    if (id.kind == SetKind::O) {
      return ElementStore::from_distinct(id.n, std::move(all), id.describe());
    }
    auto flags = kernels::parallel::filter(
        all, [&id](Transformation const& t) { return contains(id, t); });
    std::vector<Transformation> kept;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (flags[i]) {
        kept.push_back(std::move(all[i]));
      }
    }
    return ElementStore::from_distinct(id.n, std::move(kept), id.describe());
  }

  ElementStore layer(ElementStore const& s, std::size_t r) {
    std::vector<Transformation> kept;
    for (auto const& t : s) {
      if (image_size(t) == r) {
        kept.push_back(t);
      }
    }
    return ElementStore::from_distinct(s.degree(), std::move(kept),
                                       "D_" + std::to_string(r) + "(" + s.label() + ")");
  }

  std::vector<Point> captive_set(std::vector<Point> const& y, std::size_t n) {
    std::vector<Point> ys(y);
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    auto in_y = [&](Point p) { return std::binary_search(ys.begin(), ys.end(), p); };
    std::vector<Point> out;
    for (auto p : ys) {
      if (p < 1 || p > n) {
        throw std::out_of_range("Y contains " + std::to_string(p) + ", outside 1.."
                                + std::to_string(n));
      }
      if (p == 1 || p == n || (in_y(p - 1) && in_y(p + 1))) {
        out.push_back(p);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Closed forms
  ////////////////////////////////////////////////////////////////////////////

  BigInt binomial(long long a, long long b) {
    if (a < 0 || b < 0 || b > a) {
      return 0;
    }
    b = std::min(b, a - b);
    BigInt r = 1;
    for (long long i = 1; i <= b; ++i) {
      r *= a - b + i;
      r /= i;
    }
    return r;
  }

  namespace {
    void need(bool ok, SemigroupId const& id, char const* what) {
      if (!ok) {
        throw std::domain_error(id.describe() + ": " + what);
      }
    }
  }  // namespace

  BigInt card(SemigroupId const& id) {
    id.validate();
    auto const n = static_cast<long long>(id.n);
    auto const k = static_cast<long long>(id.k);
    switch (id.kind) {
      case SetKind::O:
        return binomial(2 * n - 1, n - 1);
      case SetKind::L:
        need(n >= 2, id, "the |L_k| formulas need n >= 2");
        if (k == 1 || k == n) {
          return binomial(2 * n - 2, n - 2);
        }
        return binomial(2 * n - 2, n - 2) + binomial(2 * n - 3, n - 2);
      case SetKind::R:
        need(n >= 2, id, "the |R_k| formulas need n >= 2");
        if (k == 1 || k == n) {
          return binomial(2 * n - 3, n - 1);
        }
        return binomial(2 * n - 2, n - 1)
               - binomial(2 * k - 3, k - 2) * binomial(2 * n - 2 * k - 1, n - k - 1);
      case SetKind::Z:
        need(n >= 2, id, "the |Z_k| formulas need n >= 2");
        if (n == 2) {
          // Z_1 = R_1 and Z_2 = R_2 when n = 2.
          return card(SemigroupId::R(id.n, id.k));
        }
        if (k == 1 || k == n) {
          return binomial(2 * n - 4, n - 2);
        }
        return card(SemigroupId::R(id.n, id.k))
               - (binomial(2 * n - 4, n - 1)
                  - binomial(2 * k - 4, k - 2) * binomial(2 * n - 2 * k - 2, n - k - 1));
      default:
        throw std::invalid_argument("no closed-form cardinality for " + id.describe());
    }
  }

  BigInt rank_formula(SemigroupId const& id) {
    id.validate();
    auto const n = static_cast<long long>(id.n);
    auto const k = static_cast<long long>(id.k);
    switch (id.kind) {
      case SetKind::IO:
        need(n >= 3, id, "rank(IO_n) = n-1 is stated for n >= 3");
        return n - 1;
      case SetKind::O_Y: {
        auto const r = static_cast<long long>(id.y.size());
        need(1 < r && r < n, id, "rank(O_n(Y)) is stated for 1 < |Y| < n");
        return binomial(n - 1, r - 1) + captive_set(id.y, id.n).size();
      }
      case SetKind::L:
        need(n >= 3, id, "rank(L_k) is stated for n >= 3");
        if (k == 1 || k == n) {
          return 2 * n - 3;
        }
        return 2 * n - 4;
      case SetKind::R:
        need(k == 1 || k == n, id, "R_k is a semigroup only for k in {1, n}");
        need(n >= 2, id, "rank(R_1) is stated for n >= 2");
        if (n == 2) {
          return 1;
        }
        return 2 * n - 4;
      case SetKind::Z:
        need(k == 1 || k == n, id, "Z_k is a semigroup only for k in {1, n}");
        need(n >= 3, id, "rank(Z_1) is stated for n >= 3");
        if (n == 3) {
          return 1;
        }
        if (n == 4) {
          return 2;
        }
        return 2 * n - 5;
      case SetKind::R1_STAR:
        need(n >= 4, id, "the minimal generating set of R_1* is stated for n >= 4");
        return n - 1;
      case SetKind::Z1_STAR:
        need(n >= 5, id, "the minimal generating set of Z_1* is stated for n >= 5");
        return 2 * n - 7;
      default:
        throw std::domain_error("no rank value known for " + id.describe());
    }
  }

}  // namespace opzd
