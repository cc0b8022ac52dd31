#ifndef OPZD_CLAIMS_HPP_
#define OPZD_CLAIMS_HPP_

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "opzd/engine.hpp"
#include "opzd/families.hpp"

namespace opzd {

  // Listed in the order the results appear.
  enum class ClaimId {
    LEMMA_1,
    LEMMA_2,
    LEMMA_3,
    SUBSEMIGROUP_IFF,
    THEOREM_4,
    THEOREM_5,
    COROLLARY_6,
    LEMMA_7,
    THEOREM_8,
    PROP_9,
    LEMMA_10,
    THEOREM_11,
    COROLLARY_12,
    LEMMA_13,
    THEOREM_14,
    FINAL_REMARK
  };

  enum class ClaimStatus { PASS, FAIL, SKIPPED };

  std::string_view           claim_name(ClaimId id) noexcept;  // "LEMMA_1"
  std::optional<ClaimId>     parse_claim(std::string_view s);  // case-insensitive
  std::vector<ClaimId> const& all_claims() noexcept;
  std::string_view           status_name(ClaimStatus s) noexcept;  // "pass"
  // Smallest n the claim is stated for.
  std::size_t claim_min_degree(ClaimId id) noexcept;

  struct ClaimParams {
    // Run the small-degree statements (n = 3, 4) of rank claims stated
    // for n >= 5.
    bool small_n = false;
    // Sets Y for the O_n(Y) rank check; empty means the default choice.
    std::vector<std::vector<Point>> y_sets;
    SearchBudget budget{};
    // Replaces a named family inside the checkers (negative controls).
    std::map<FamilyName, std::vector<Transformation>> family_override;

    nlohmann::json to_json() const;
  };

  struct ClaimReport {
    ClaimId        claim = ClaimId::LEMMA_1;
    std::size_t    n     = 0;
    nlohmann::json params;
    ClaimStatus    status = ClaimStatus::SKIPPED;
    std::string    reason;  // first failed sub-assertion, or why skipped
    std::string    mode;    // "exact", "bounds", "enumeration", ...
    nlohmann::json evidence = nlohmann::json::object();
    nlohmann::json counterexample;  // set on fail
    std::chrono::duration<double> elapsed{};

    bool passed() const noexcept {
      return status == ClaimStatus::PASS;
    }
  };

  ClaimReport verify(ClaimId id, std::size_t n, ClaimParams const& params = {});

  // Every claim at degree n, in the order of ClaimId. Claims whose
  // threshold exceeds n are reported as skipped; THEOREM_14 runs its
  // small-degree statements at n = 3, 4.
  std::vector<ClaimReport> verify_all(std::size_t n, ClaimParams const& params = {});

  // Pass unless some report failed.
  bool all_passed(std::vector<ClaimReport> const& reports) noexcept;

}  // namespace opzd

#endif  // OPZD_CLAIMS_HPP_
