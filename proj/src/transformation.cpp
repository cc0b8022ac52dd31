#include "opzd/transformation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace opzd {

  namespace {
    void check_degree(std::size_t n) {
      if (n == 0 || n > kMaxDegree) {
        throw std::invalid_argument("degree must lie in 1.." + std::to_string(kMaxDegree)
                                    + ", got " + std::to_string(n));
      }
    }

    void check_point(std::size_t n, Point k) {
      if (k < 1 || k > n) {
        throw std::out_of_range("point " + std::to_string(k) + " outside 1.."
                                + std::to_string(n));
      }
    }
  }  // namespace

  Transformation::Transformation(std::size_t n, std::span<int const> images) {
    check_degree(n);
    if (images.size() != n) {
      throw std::invalid_argument("image word has length " + std::to_string(images.size())
                                  + ", expected " + std::to_string(n));
    }
    images_.reserve(n);
    for (int v : images) {
      if (v < 1 || static_cast<std::size_t>(v) > n) {
        throw std::invalid_argument("image entry " + std::to_string(v) + " outside 1.."
                                    + std::to_string(n));
      }
      images_.push_back(static_cast<std::uint8_t>(v));
    }
  }

  Point Transformation::at(Point x) const {
    check_point(degree(), x);
    return images_[x - 1];
  }

  std::vector<int> Transformation::images() const {
    return {images_.begin(), images_.end()};
  }

  std::size_t Transformation::hash() const noexcept {
    // FNV-1a
    std::uint64_t h = 14695981039346656037ull;
    for (auto v : images_) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

  std::strong_ordering operator<=>(Transformation const& a, Transformation const& b) noexcept {
    if (auto c = a.degree() <=> b.degree(); c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(
        a.images_.begin(), a.images_.end(), b.images_.begin(), b.images_.end());
  }

  Transformation from_raw(std::vector<std::uint8_t> images) {
    Transformation t;
    t.images_ = std::move(images);
    return t;
  }

  Transformation make_transformation(std::size_t n, std::span<int const> images) {
    return Transformation(n, images);
  }

  Transformation identity(std::size_t n) {
    check_degree(n);
    std::vector<std::uint8_t> w(n);
    std::iota(w.begin(), w.end(), std::uint8_t{1});
    return from_raw(std::move(w));
  }

  Transformation constant(std::size_t n, Point k) {
    check_degree(n);
    check_point(n, k);
    return from_raw(std::vector<std::uint8_t>(n, static_cast<std::uint8_t>(k)));
  }

  Transformation compose(Transformation const& a, Transformation const& b) {
    if (a.degree() != b.degree()) {
      throw std::invalid_argument("cannot compose degree " + std::to_string(a.degree())
                                  + " with degree " + std::to_string(b.degree()));
    }
    std::vector<std::uint8_t> w(a.degree());
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] = b.images_[a.images_[i] - 1];
    }
    return from_raw(std::move(w));
  }

  Transformation compose_all(std::span<Transformation const> word) {
    if (word.empty()) {
      throw std::invalid_argument("cannot multiply an empty word");
    }
    Transformation result = word.front();
    for (auto const& t : word.subspan(1)) {
      result = compose(result, t);
    }
    return result;
  }

  std::vector<Point> image(Transformation const& a) {
    std::vector<Point> im(a.raw().begin(), a.raw().end());
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  }

  std::size_t image_size(Transformation const& a) {
    std::vector<bool> seen(a.degree() + 1, false);
    std::size_t       r = 0;
    for (auto v : a.raw()) {
      if (!seen[v]) {
        seen[v] = true;
        ++r;
      }
    }
    return r;
  }

  std::vector<Point> fix_set(Transformation const& a) {
    std::vector<Point> fix;
    for (Point x = 1; x <= a.degree(); ++x) {
      if (a(x) == x) {
        fix.push_back(x);
      }
    }
    return fix;
  }

  std::vector<Point> preimage(Transformation const& a, Point k) {
    std::vector<Point> pre;
    for (Point x = 1; x <= a.degree(); ++x) {
      if (a(x) == k) {
        pre.push_back(x);
      }
    }
    return pre;
  }

  bool is_order_preserving(Transformation const& a) noexcept {
    auto w = a.raw();
    return std::is_sorted(w.begin(), w.end());
  }

  bool is_order_decreasing(Transformation const& a) noexcept {
    for (Point x = 1; x <= a.degree(); ++x) {
      if (a(x) > x) {
        return false;
      }
    }
    return true;
  }

  bool is_order_increasing(Transformation const& a) noexcept {
    for (Point x = 1; x <= a.degree(); ++x) {
      if (a(x) < x) {
        return false;
      }
    }
    return true;
  }

  bool is_idempotent(Transformation const& a) {
    return compose(a, a) == a;
  }

  Transformation dual(Transformation const& a) {
    std::size_t const         n = a.degree();
    std::vector<std::uint8_t> w(n);
    for (Point x = 1; x <= n; ++x) {
      w[x - 1] = static_cast<std::uint8_t>(n + 1 - a(n + 1 - x));
    }
    return from_raw(std::move(w));
  }

  std::string to_string(Transformation const& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.degree(); ++i) {
      if (i != 0) {
        s += ',';
      }
      s += std::to_string(a.raw()[i]);
    }
    s += ']';
    return s;
  }

  Transformation parse_transformation(std::string_view text) {
    std::string compact;
    for (char c : text) {
      if (c != ' ' && c != '\t' && c != '\n' && c != '\r') {
        compact += c;
      }
    }
    if (compact.size() < 2 || compact.front() != '[' || compact.back() != ']') {
      throw std::invalid_argument("expected a bracketed image word, got \"" + std::string(text)
                                  + "\"");
    }
    std::string_view body(compact);
    body = body.substr(1, body.size() - 2);
    std::vector<int> images;
    while (!body.empty()) {
      auto comma = body.find(',');
      auto tok   = body.substr(0, comma);
      int  v     = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw std::invalid_argument("bad image entry \"" + std::string(tok) + "\"");
      }
      images.push_back(v);
      if (comma == std::string_view::npos) {
        break;
      }
      body.remove_prefix(comma + 1);
      if (body.empty()) {
        throw std::invalid_argument("trailing comma in \"" + std::string(text) + "\"");
      }
    }
    return Transformation(images.size(), images);
  }

  ////////////////////////////////////////////////////////////////////////////
  // OrderedPartition
  ////////////////////////////////////////////////////////////////////////////

  OrderedPartition::OrderedPartition(std::size_t n, std::vector<Block> blocks)
      : degree_(n), blocks_(std::move(blocks)) {
    check_degree(n);
    std::vector<bool> seen(n + 1, false);
    std::size_t       total = 0;
    for (auto& b : blocks_) {
      if (b.empty()) {
        throw std::invalid_argument("partition has an empty block");
      }
      std::sort(b.begin(), b.end());
      for (auto x : b) {
        check_point(n, x);
        if (seen[x]) {
          throw std::invalid_argument("point " + std::to_string(x)
                                      + " appears in two blocks");
        }
        seen[x] = true;
        ++total;
      }
    }
    if (total != n) {
      throw std::invalid_argument("blocks do not cover 1.." + std::to_string(n));
    }
  }

  bool OrderedPartition::is_convex() const noexcept {
    return std::all_of(blocks_.begin(), blocks_.end(), [](Block const& b) {
      return b.back() - b.front() + 1 == b.size();
    });
  }

  bool OrderedPartition::is_ordered() const noexcept {
    for (std::size_t i = 1; i < blocks_.size(); ++i) {
      if (blocks_[i - 1].back() >= blocks_[i].front()) {
        return false;
      }
    }
    return true;
  }

  std::size_t OrderedPartition::block_of(Point x) const {
    check_point(degree_, x);
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), x)) {
        return i;
      }
    }
    throw std::logic_error("unreachable: point not covered by partition");
  }

  bool OrderedPartition::refines(OrderedPartition const& coarser) const {
    if (degree_ != coarser.degree_) {
      return false;
    }
    std::vector<std::size_t> label(degree_ + 1);
    for (std::size_t i = 0; i < coarser.blocks_.size(); ++i) {
      for (auto x : coarser.blocks_[i]) {
        label[x] = i;
      }
    }
    return std::all_of(blocks_.begin(), blocks_.end(), [&](Block const& b) {
      return std::all_of(b.begin(), b.end(), [&](Point x) { return label[x] == label[b[0]]; });
    });
  }

  bool operator==(OrderedPartition const& a, OrderedPartition const& b) {
    if (a.degree_ != b.degree_ || a.blocks_.size() != b.blocks_.size()) {
      return false;
    }
    auto canon = [](std::vector<OrderedPartition::Block> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    return canon(a.blocks_) == canon(b.blocks_);
  }

  std::string to_string(OrderedPartition const& p) {
    std::string s = "{";
    for (std::size_t i = 0; i < p.blocks().size(); ++i) {
      s += i == 0 ? "{" : ",{";
      for (std::size_t j = 0; j < p.blocks()[i].size(); ++j) {
        if (j != 0) {
          s += ',';
        }
        s += std::to_string(p.blocks()[i][j]);
      }
      s += '}';
    }
    return s + "}";
  }

  OrderedPartition kernel(Transformation const& a) {
    std::vector<OrderedPartition::Block> blocks;
    for (Point k : image(a)) {
      blocks.push_back(preimage(a, k));
    }
    return OrderedPartition(a.degree(), std::move(blocks));
  }

  OrderedPartition equivalence_closure(std::span<std::pair<Point, Point> const> pairs,
                                       std::size_t                            n) {
    check_degree(n);
    std::vector<Point> parent(n + 1);
    std::iota(parent.begin(), parent.end(), Point{0});
    auto find = [&](Point x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    for (auto [x, y] : pairs) {
      check_point(n, x);
      check_point(n, y);
      auto rx = find(x);
      auto ry = find(y);
      if (rx != ry) {
        parent[std::max(rx, ry)] = std::min(rx, ry);
      }
    }
    // Blocks listed by their least element.
    std::vector<OrderedPartition::Block> blocks;
    std::vector<std::size_t>             slot(n + 1, SIZE_MAX);
    for (Point x = 1; x <= n; ++x) {
      auto r = find(x);
      if (slot[r] == SIZE_MAX) {
        slot[r] = blocks.size();
        blocks.emplace_back();
      }
      blocks[slot[r]].push_back(x);
    }
    return OrderedPartition(n, std::move(blocks));
  }

  TabularForm tabular_form(Transformation const& a) {
    if (!is_order_preserving(a)) {
      throw std::invalid_argument("tabular form needs an order-preserving map, got "
                                  + to_string(a));
    }
    return TabularForm{kernel(a), image(a)};
  }

  Transformation from_tabular_form(TabularForm const& t) {
    auto const& blocks = t.blocks.blocks();
    if (blocks.size() != t.values.size()) {
      throw std::invalid_argument("tabular form has " + std::to_string(blocks.size())
                                  + " blocks but " + std::to_string(t.values.size())
                                  + " values");
    }
    std::size_t const         n = t.blocks.degree();
    std::vector<std::uint8_t> w(n, 0);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      check_point(n, t.values[i]);
      for (auto x : blocks[i]) {
        w[x - 1] = static_cast<std::uint8_t>(t.values[i]);
      }
    }
    return from_raw(std::move(w));
  }

}  // namespace opzd
