#ifndef OPZD_TRANSFORMATION_HPP_
#define OPZD_TRANSFORMATION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace opzd {

  // A point of the chain X_n = {1 < 2 < ... < n}. The domain layer is 1-based.
  using Point = std::size_t;

  // Largest supported chain; points are stored in one byte.
  inline constexpr std::size_t kMaxDegree = 255;

  // A full transformation of X_n, stored as its image word. Composition acts
  // on the right: x(ab) = (xa)b.
  class Transformation {
   public:
    Transformation() = default;

    // Throws std::invalid_argument on a wrong length or an entry outside 1..n.
    Transformation(std::size_t n, std::span<int const> images);
    Transformation(std::size_t n, std::initializer_list<int> images)
        : Transformation(n, std::span<int const>(images.begin(), images.size())) {}

    std::size_t degree() const noexcept {
      return images_.size();
    }

    // xa for 1 <= x <= n (unchecked).
    Point operator()(Point x) const noexcept {
      return images_[x - 1];
    }

    // xa for 1 <= x <= n; throws std::out_of_range otherwise.
    Point at(Point x) const;

    std::vector<int> images() const;

    std::span<std::uint8_t const> raw() const noexcept {
      return images_;
    }

    std::size_t hash() const noexcept;

    friend bool operator==(Transformation const&, Transformation const&) = default;
    // Degree first, then lexicographic on the image word.
    friend std::strong_ordering operator<=>(Transformation const& a,
                                            Transformation const& b) noexcept;

   private:
    friend Transformation compose(Transformation const&, Transformation const&);
    friend Transformation from_raw(std::vector<std::uint8_t>);

    std::vector<std::uint8_t> images_;
  };

  // Builds a transformation from 1-based images already known to be valid.
  Transformation from_raw(std::vector<std::uint8_t> images);

  Transformation make_transformation(std::size_t n, std::span<int const> images);
  Transformation identity(std::size_t n);
  // The constant map pi_k.
  Transformation constant(std::size_t n, Point k);

  // x(ab) = (xa)b. Throws std::invalid_argument on a degree mismatch.
  Transformation compose(Transformation const& a, Transformation const& b);
  // Left-to-right product of a nonempty word.
  Transformation compose_all(std::span<Transformation const> word);

  std::vector<Point> image(Transformation const& a);
  std::size_t image_size(Transformation const& a);
  std::vector<Point> fix_set(Transformation const& a);
  // The preimage k a^{-1}, sorted.
  std::vector<Point> preimage(Transformation const& a, Point k);

  bool is_order_preserving(Transformation const& a) noexcept;
  bool is_order_decreasing(Transformation const& a) noexcept;
  bool is_order_increasing(Transformation const& a) noexcept;
  bool is_idempotent(Transformation const& a);

  // Conjugate by the chain reversal x -> n+1-x.
  Transformation dual(Transformation const& a);

  // Canonical text form, e.g. "[1,1,2]".
  std::string to_string(Transformation const& a);
  // Inverse of to_string; whitespace is tolerated. Throws std::invalid_argument.
  Transformation parse_transformation(std::string_view text);

  ////////////////////////////////////////////////////////////////////////////
  // Partitions of X_n
  ////////////////////////////////////////////////////////////////////////////

  class OrderedPartition {
   public:
    using Block = std::vector<Point>;

    OrderedPartition() = default;
    // Blocks are sorted internally; their listed order is kept. Throws
    // std::invalid_argument unless the blocks partition {1..n}.
    OrderedPartition(std::size_t n, std::vector<Block> blocks);

    std::size_t degree() const noexcept {
      return degree_;
    }
    std::vector<Block> const& blocks() const noexcept {
      return blocks_;
    }
    std::size_t size() const noexcept {
      return blocks_.size();
    }

    bool is_convex() const noexcept;
    // max(block i) < min(block i+1) for every consecutive pair.
    bool is_ordered() const noexcept;

    // Index of the block holding x.
    std::size_t block_of(Point x) const;

    // Every block of *this lies inside a block of coarser.
    bool refines(OrderedPartition const& coarser) const;

    // Equality as partitions: listing order of blocks is ignored.
    friend bool operator==(OrderedPartition const& a, OrderedPartition const& b);

   private:
    std::size_t        degree_ = 0;
    std::vector<Block> blocks_;
  };

  std::string to_string(OrderedPartition const& p);

  // Preimage classes of a, listed by increasing image value.
  OrderedPartition kernel(Transformation const& a);

  // Partition induced by the smallest equivalence relation on X_n containing
  // pairs. Throws std::out_of_range on a point outside 1..n.
  OrderedPartition equivalence_closure(std::span<std::pair<Point, Point> const> pairs,
                                       std::size_t                            n);

  struct TabularForm {
    OrderedPartition   blocks;
    std::vector<Point> values;  // strictly increasing, values[i] = image of block i
  };

  // Throws std::invalid_argument when a is not order-preserving.
  TabularForm    tabular_form(Transformation const& a);
  Transformation from_tabular_form(TabularForm const& t);

}  // namespace opzd

template <>
struct std::hash<opzd::Transformation> {
  std::size_t operator()(opzd::Transformation const& t) const noexcept {
    return t.hash();
  }
};

#endif  // OPZD_TRANSFORMATION_HPP_
