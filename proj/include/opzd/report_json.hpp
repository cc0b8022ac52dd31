#ifndef OPZD_REPORT_JSON_HPP_
#define OPZD_REPORT_JSON_HPP_

#include <string_view>

#include "json.hpp"

#include "opzd/claims.hpp"
#include "opzd/engine.hpp"
#include "opzd/enumeration.hpp"

namespace opzd {

  inline constexpr int kJsonSchema = 1;

  // {"schema": 1, "kind": kind, ...payload}
  nlohmann::json envelope(std::string_view kind, nlohmann::json payload);

  nlohmann::json to_json(ElementStore const& s);
  nlohmann::json to_json(ClosureResult const& c, bool with_words = true);
  nlohmann::json to_json(RankCertificate const& r);
  // Elapsed time breaks byte-identical output, so it is opt-in.
  nlohmann::json to_json(ClaimReport const& r, bool with_timing = false);

  // Number when it fits in 64 bits, decimal string otherwise.
  nlohmann::json to_json(BigInt const& x);

}  // namespace opzd

#endif  // OPZD_REPORT_JSON_HPP_
