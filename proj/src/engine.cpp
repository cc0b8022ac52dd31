#include "opzd/engine.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>

#include "opzd/kernels.hpp"

namespace opzd {

  ////////////////////////////////////////////////////////////////////////////
  // Closure
  ////////////////////////////////////////////////////////////////////////////

  std::vector<std::size_t> ClosureResult::word(std::size_t i) const {
    std::vector<std::size_t> w;
    while (true) {
      w.push_back(via[i]);
      if (parent[i] == kNoParent) {
        break;
      }
      i = parent[i];
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

  ClosureResult closure(std::span<Transformation const> generators, ClosureOptions opts) {
    if (generators.empty()) {
      throw std::invalid_argument("closure needs at least one generator");
    }
    std::size_t const n = generators.front().degree();
    ClosureResult     result{ElementStore(n), {}, 0, 0, {}, {}};
    for (auto const& g : generators) {
      if (g.degree() != n) {
        throw std::invalid_argument("generators of mixed degree");
      }
      if (result.elements.insert(g)) {
        result.parent.push_back(ClosureResult::kNoParent);
        result.via.push_back(static_cast<std::uint32_t>(result.generators.size()));
        result.generators.push_back(g);
      }
    }
    result.generator_count = result.generators.size();

    std::size_t level_begin = 0;
    std::size_t level_end   = result.elements.size();
    while (level_begin < level_end) {
      std::span<Transformation const> frontier(result.elements.elements().data() + level_begin,
                                               level_end - level_begin);
      auto products = opts.parallel
                          ? kernels::parallel::right_products(frontier, result.generators)
                          : kernels::serial::right_products(frontier, result.generators);
      result.product_count += products.size();
      std::size_t const G = result.generators.size();
      for (std::size_t i = 0; i < products.size(); ++i) {
        if (result.elements.insert(products[i])) {
          result.parent.push_back(static_cast<std::uint32_t>(level_begin + i / G));
          result.via.push_back(static_cast<std::uint32_t>(i % G));
        }
      }
      level_begin = level_end;
      level_end   = result.elements.size();
    }
    return result;
  }

  bool is_generating_set(std::span<Transformation const> generators,
                         ElementStore const&             target) {
    if (generators.empty()) {
      return target.empty();
    }
    return closure(generators).elements.same_set(target);
  }

  ////////////////////////////////////////////////////////////////////////////
  // Pairwise scans
  ////////////////////////////////////////////////////////////////////////////

  SubsemigroupReport check_subsemigroup(ElementStore const& s) {
    auto v = kernels::parallel::first_closure_violation(s);
    if (!v) {
      return {true, std::nullopt};
    }
    return {false, std::make_pair(s[v->first], s[v->second])};
  }

  bool is_subsemigroup(ElementStore const& s) {
    return check_subsemigroup(s).closed;
  }

  namespace {
    [[noreturn]] void throw_not_closed(ElementStore const& s,
                                       std::pair<std::size_t, std::size_t> v) {
      throw std::invalid_argument("set is not closed: " + to_string(s[v.first]) + " * "
                                  + to_string(s[v.second]) + " leaves it");
    }
  }  // namespace

  ElementStore undecomposables(ElementStore const& s) {
    auto scan = kernels::parallel::pair_scan(s);
    if (scan.violation) {
      throw_not_closed(s, *scan.violation);
    }
    std::vector<Transformation> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!scan.decomposable[i]) {
        out.push_back(s[i]);
      }
    }
    return ElementStore::from_distinct(s.degree(), std::move(out),
                                       "undecomposables(" + s.label() + ")");
  }

  ////////////////////////////////////////////////////////////////////////////
  // Rank search
  ////////////////////////////////////////////////////////////////////////////

  namespace {

    struct BudgetExhausted {};

    // Works on element indices of a closed set through its Cayley table.
    class RankSearch {
     public:
      RankSearch(ElementStore const& s, kernels::ProductTable table)
          : s_(s), table_(std::move(table)), N_(s.size()) {
        order_.resize(N_);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        rank_.resize(N_);
        for (std::size_t i = 0; i < N_; ++i) {
          rank_[i] = image_size(s[i]);
        }
        // Candidate order: descending image size, then image word.
        std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
          if (rank_[a] != rank_[b]) {
            return rank_[a] > rank_[b];
          }
          return s_[a] < s_[b];
        });
        layer_end_.resize(N_);
        for (std::size_t p = N_; p-- > 0;) {
          layer_end_[p] = (p + 1 < N_ && rank_[order_[p + 1]] == rank_[order_[p]])
                              ? layer_end_[p + 1]
                              : p + 1;
        }
      }

      struct State {
        std::vector<unsigned char> covered;
        std::vector<std::size_t>   members;
        std::vector<std::size_t>   gens;
      };

      State initial(std::vector<std::size_t> const& mandatory, std::uint64_t& work) const {
        State st{std::vector<unsigned char>(N_, 0), {}, {}};
        for (auto g : mandatory) {
          add(st, g, work, UINT64_MAX);
        }
        return st;
      }

      // Adds generator x and closes. Every new word has the form p x q with
      // p in the old closure (or empty), so seeding with x and c x and then
      // right multiplying by all generators reaches everything.
      void add(State& st, std::size_t x, std::uint64_t& work, std::uint64_t limit) const {
        st.gens.push_back(x);
        std::vector<std::size_t> queue;
        auto                     push = [&](std::size_t e) {
          if (!st.covered[e]) {
            st.covered[e] = 1;
            queue.push_back(e);
          }
        };
        push(x);
        for (std::size_t i = 0, m = st.members.size(); i < m; ++i) {
          push(table_(st.members[i], x));
        }
        work += st.members.size();
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
          auto y = queue[qi];
          for (auto g : st.gens) {
            push(table_(y, g));
          }
          work += st.gens.size();
          if (work > limit) {
            throw BudgetExhausted{};
          }
        }
        st.members.insert(st.members.end(), queue.begin(), queue.end());
      }

      bool full(State const& st) const {
        return st.members.size() == N_;
      }

      // Positions in candidate order that may be added next: uncovered
      // elements of the top uncovered layer, after last_pos.
      std::vector<std::size_t> candidates(State const& st, std::size_t first_pos) const {
        std::size_t u = 0;
        while (u < N_ && st.covered[order_[u]]) {
          ++u;
        }
        std::vector<std::size_t> out;
        if (u == N_) {
          return out;
        }
        for (std::size_t p = std::max(u, first_pos); p < layer_end_[u]; ++p) {
          if (!st.covered[order_[p]]) {
            out.push_back(p);
          }
        }
        return out;
      }

      // Depth-first search for `depth` more generators, in increasing
      // candidate order; fills extras with positions on success.
      bool dfs(State const& st, std::size_t first_pos, std::size_t depth,
               std::vector<std::size_t>& extras, std::uint64_t& work,
               std::uint64_t limit) const {
        if (full(st)) {
          return true;
        }
        if (depth == 0) {
          return false;
        }
        for (auto p : candidates(st, first_pos)) {
          State next = st;
          add(next, order_[p], work, limit);
          extras.push_back(p);
          if (dfs(next, p + 1, depth - 1, extras, work, limit)) {
            return true;
          }
          extras.pop_back();
        }
        return false;
      }

      std::size_t element_at(std::size_t pos) const {
        return order_[pos];
      }
      std::size_t position_of(std::size_t element) const {
        return static_cast<std::size_t>(
            std::find(order_.begin(), order_.end(), element) - order_.begin());
      }

     private:
      ElementStore const&        s_;
      kernels::ProductTable      table_;
      std::size_t                N_;
      std::vector<std::size_t>   order_;
      std::vector<std::size_t>   rank_;
      std::vector<std::size_t>   layer_end_;
    };

    void sort_candidate_order(std::vector<Transformation>& v) {
      std::sort(v.begin(), v.end(), [](Transformation const& a, Transformation const& b) {
        auto ra = image_size(a);
        auto rb = image_size(b);
        return ra != rb ? ra > rb : a < b;
      });
    }

    RankCertificate bounds_only(ElementStore const& s, std::vector<Transformation> mandatory,
                                std::size_t proven_lower, std::span<Transformation const> known,
                                std::string note) {
      RankCertificate cert;
      cert.mandatory         = std::move(mandatory);
      cert.search_exhaustive = false;
      cert.lower_bound       = std::max(proven_lower, cert.mandatory.size());
      cert.note              = std::move(note);
      if (!known.empty() && is_generating_set(known, s)) {
        cert.witness.assign(known.begin(), known.end());
      } else {
        cert.witness = s.elements();
      }
      sort_candidate_order(cert.witness);
      cert.upper_bound = cert.witness.size();
      cert.rank        = cert.upper_bound;
      return cert;
    }

  }  // namespace

  RankCertificate rank_exact(ElementStore const& s, SearchBudget const& budget,
                             std::span<Transformation const> known_generators) {
    if (s.empty()) {
      throw std::invalid_argument("rank of an empty set");
    }
    auto scan = kernels::parallel::pair_scan(s);
    if (scan.violation) {
      throw_not_closed(s, *scan.violation);
    }
    std::vector<std::size_t>    mandatory_idx;
    std::vector<Transformation> mandatory;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!scan.decomposable[i]) {
        mandatory_idx.push_back(i);
        mandatory.push_back(s[i]);
      }
    }
    sort_candidate_order(mandatory);

    if (s.size() > budget.max_elements) {
      std::size_t lower = mandatory.size();
      if (mandatory.empty() || !is_generating_set(mandatory, s)) {
        ++lower;
      }
      return bounds_only(s, mandatory, lower, known_generators,
                         "set too large for exact search");
    }

    RankSearch    search(s, kernels::parallel::product_table(s));
    std::uint64_t work = 0;
    auto const    root = search.initial(mandatory_idx, work);

    RankCertificate cert;
    cert.mandatory = mandatory;
    if (search.full(root)) {
      cert.rank              = mandatory.size();
      cert.witness           = mandatory;
      cert.search_exhaustive = true;
      cert.lower_bound = cert.upper_bound = cert.rank;
      cert.product_count                  = work;
      return cert;
    }

    for (std::size_t depth = 1; depth <= budget.max_extra; ++depth) {
      auto const first = search.candidates(root, 0);
      auto const B     = first.size();

      enum Outcome : unsigned char { kNone, kFound, kExhausted, kSkipped };
      std::vector<Outcome>                  outcome(B, kSkipped);
      std::vector<std::vector<std::size_t>> extras(B);
      std::vector<std::uint64_t>            branch_work(B, 0);
      std::atomic<std::size_t>              best{SIZE_MAX};

      auto const branches = static_cast<std::int64_t>(B);
#pragma omp parallel for schedule(dynamic, 1)
      for (std::int64_t b = 0; b < branches; ++b) {
        // A branch after a success cannot produce the least witness.
        if (static_cast<std::size_t>(b) > best.load(std::memory_order_relaxed)) {
          continue;
        }
        std::uint64_t w = 0;
        try {
          auto st = root;
          search.add(st, search.element_at(first[b]), w, budget.max_products);
          std::vector<std::size_t> ex{first[b]};
          if (search.dfs(st, first[b] + 1, depth - 1, ex, w, budget.max_products)) {
            outcome[b] = kFound;
            extras[b]  = std::move(ex);
            auto cur   = best.load(std::memory_order_relaxed);
            while (static_cast<std::size_t>(b) < cur
                   && !best.compare_exchange_weak(cur, static_cast<std::size_t>(b))) {
            }
          } else {
            outcome[b] = kNone;
          }
        } catch (BudgetExhausted const&) {
          outcome[b] = kExhausted;
        }
        branch_work[b] = w;
      }
      for (auto w : branch_work) {
        work += w;
      }

      auto const found = best.load();
      bool       lost  = false;  // an earlier branch ran out of budget
      for (std::size_t b = 0; b < std::min(found, B); ++b) {
        lost |= outcome[b] == kExhausted;
      }
      if (found != SIZE_MAX) {
        cert.rank = mandatory.size() + depth;
        cert.witness = mandatory;
        for (auto p : extras[found]) {
          cert.witness.push_back(s[search.element_at(p)]);
        }
        sort_candidate_order(cert.witness);
        cert.search_exhaustive = true;
        cert.lower_bound = cert.upper_bound = cert.rank;
        cert.product_count                  = work;
        if (lost) {
          cert.note = "rank proven; an earlier branch hit the budget, so the witness "
                      "may not be the least one";
        }
        return cert;
      }
      if (lost) {
        auto c = bounds_only(s, mandatory, mandatory.size() + depth, known_generators,
                             "product budget exhausted at depth " + std::to_string(depth));
        c.product_count = work;
        return c;
      }
    }
    auto c = bounds_only(s, mandatory, mandatory.size() + budget.max_extra + 1,
                         known_generators,
                         "no generating set within " + std::to_string(budget.max_extra)
                             + " extra generators");
    c.product_count = work;
    return c;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Isomorphisms
  ////////////////////////////////////////////////////////////////////////////

  IsomorphismReport verify_isomorphism(ElementMap const& map, ElementStore const& s,
                                       ElementStore const& t) {
    std::vector<Transformation> img;
    img.reserve(s.size());
    ElementStore seen(t.degree());
    for (auto const& a : s) {
      Transformation m;
      try {
        m = map(a);
      } catch (std::exception const& e) {
        return {false, "map undefined at " + to_string(a) + ": " + e.what(), std::nullopt};
      }
      if (!t.contains(m)) {
        return {false, "image " + to_string(m) + " of " + to_string(a) + " is outside T",
                std::nullopt};
      }
      if (!seen.insert(m)) {
        auto prior = std::find(img.begin(), img.end(), m) - img.begin();
        return {false, "not injective", std::make_pair(s[prior], a)};
      }
      img.push_back(std::move(m));
    }
    if (s.size() != t.size()) {
      return {false,
              "not surjective: |S| = " + std::to_string(s.size())
                  + ", |T| = " + std::to_string(t.size()),
              std::nullopt};
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        auto ab = compose(s[i], s[j]);
        auto k  = s.index_of(ab);
        if (!k) {
          return {false, "S is not closed", std::make_pair(s[i], s[j])};
        }
        if (img[*k] != compose(img[i], img[j])) {
          return {false, "not multiplicative", std::make_pair(s[i], s[j])};
        }
      }
    }
    return {true, "", std::nullopt};
  }

}  // namespace opzd
