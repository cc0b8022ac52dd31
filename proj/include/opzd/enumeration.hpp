#ifndef OPZD_ENUMERATION_HPP_
#define OPZD_ENUMERATION_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "opzd/transformation.hpp"

namespace opzd {

  using BigInt = boost::multiprecision::cpp_int;

  // Deduplicated, insertion-ordered transformations of one degree.
  //
  // The lookup index is built lazily. Call ensure_index() before sharing a
  // store between threads that query it.
  class ElementStore {
   public:
    explicit ElementStore(std::size_t n, std::string label = {});
    ElementStore(std::size_t n, std::vector<Transformation> const& elements,
                 std::string label = {});

    // Appends t unless already present; returns whether it was new. Throws
    // std::invalid_argument on a degree mismatch.
    bool insert(Transformation const& t);

    bool                       contains(Transformation const& t) const;
    std::optional<std::size_t> index_of(Transformation const& t) const;

    std::size_t degree() const noexcept {
      return degree_;
    }
    std::size_t size() const noexcept {
      return elements_.size();
    }
    bool empty() const noexcept {
      return elements_.empty();
    }
    Transformation const& operator[](std::size_t i) const {
      return elements_[i];
    }
    std::vector<Transformation> const& elements() const noexcept {
      return elements_;
    }
    auto begin() const noexcept {
      return elements_.begin();
    }
    auto end() const noexcept {
      return elements_.end();
    }
    std::string const& label() const noexcept {
      return label_;
    }
    void set_label(std::string label) {
      label_ = std::move(label);
    }

    // Same elements, order ignored.
    bool same_set(ElementStore const& other) const;
    // Every element of *this lies in other.
    bool subset_of(ElementStore const& other) const;

    void ensure_index() const;

    // Adopts elements already known to be distinct and of degree n.
    static ElementStore from_distinct(std::size_t n, std::vector<Transformation> elements,
                                      std::string label = {});

   private:
    std::size_t                                        degree_;
    std::vector<Transformation>                        elements_;
    std::string                                        label_;
    mutable std::unordered_map<Transformation, std::size_t> index_;
    mutable bool                                       indexed_ = true;
  };

  enum class SetKind { O, IO, O_Y, L, R, Z, R1_STAR, Z1_STAR };

  // Names one of the sets O_n, IO_n, O_n(Y), L_k, R_k, Z_k, R_1*, Z_1*.
  struct SemigroupId {
    SetKind            kind = SetKind::O;
    std::size_t        n    = 1;
    Point              k    = 0;  // L, R, Z only
    std::vector<Point> y;         // O_Y only, sorted

    static SemigroupId O(std::size_t n);
    static SemigroupId IO(std::size_t n);
    static SemigroupId O_Y(std::size_t n, std::vector<Point> y);
    static SemigroupId L(std::size_t n, Point k);
    static SemigroupId R(std::size_t n, Point k);
    static SemigroupId Z(std::size_t n, Point k);
    static SemigroupId R1_star(std::size_t n);
    static SemigroupId Z1_star(std::size_t n);

    // Throws std::invalid_argument / std::out_of_range on bad parameters.
    void validate() const;

    // CLI identifier: on, ion, ony, l, r, z, r1star, z1star.
    std::string cli_name() const;
    // Human-readable, e.g. "L_2(n=4)".
    std::string describe() const;
  };

  std::optional<SetKind> parse_set_kind(std::string const& id) noexcept;

  ////////////////////////////////////////////////////////////////////////////
  // Membership
  ////////////////////////////////////////////////////////////////////////////

  // Characterized predicates; a must be order-preserving and 1 <= k <= n.
  //   L_1: n not in Im;  L_n: 1 not in Im;  L_k (1<k<n): 1 or n not in Im.
  //   R_k: k in Im and k a^{-1} != {k}.
  //   Z_k: L_k and R_k.
  bool in_L(Transformation const& a, Point k);
  bool in_R(Transformation const& a, Point k);
  bool in_Z(Transformation const& a, Point k);

  inline constexpr std::size_t kDefinitionalCap = 6;

  // Existential search over all of O_n for a witness other than pi_k.
  // Throws std::domain_error above cap.
  bool in_L_definitional(Transformation const& a, Point k,
                         std::size_t cap = kDefinitionalCap);
  bool in_R_definitional(Transformation const& a, Point k,
                         std::size_t cap = kDefinitionalCap);

  // Characterized membership in the named set (false for non-order-preserving a).
  bool contains(SemigroupId const& id, Transformation const& a);

  ////////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t kEnumerationCap = 12;

  // Calls f on every element of O_n in lexicographic order of image words.
  void for_each_order_preserving(std::size_t n,
                                 std::function<void(Transformation const&)> const& f);
  std::vector<Transformation> all_order_preserving(std::size_t n);

  // The elements of id in lexicographic order. Throws std::domain_error when
  // id.n exceeds cap.
  ElementStore enumerate(SemigroupId const& id, std::size_t cap = kEnumerationCap);

  // D_r(S): the elements of S with |Im| = r.
  ElementStore layer(ElementStore const& s, std::size_t r);

  // Y^#: endpoints 1 and n of Y, and interior points of Y whose two
  // neighbours are in Y.
  std::vector<Point> captive_set(std::vector<Point> const& y, std::size_t n);

  ////////////////////////////////////////////////////////////////////////////
  // Closed forms
  ////////////////////////////////////////////////////////////////////////////

  // C(a, b), zero when b < 0, b > a or a < 0.
  BigInt binomial(long long a, long long b);

  // |O_n|, |L_k|, |R_k|, |Z_k| by closed form. Throws std::invalid_argument
  // for other kinds and std::domain_error outside the formulas' ranges.
  BigInt card(SemigroupId const& id);

  // Known rank of id, including the small-n values. Throws
  // std::domain_error where no value is known.
  BigInt rank_formula(SemigroupId const& id);

}  // namespace opzd

#endif  // OPZD_ENUMERATION_HPP_
