#include "opzd/report_json.hpp"

namespace opzd {

  using json = nlohmann::json;

  json envelope(std::string_view kind, json payload) {
    json out{{"schema", kJsonSchema}, {"kind", kind}};
    for (auto& [key, value] : payload.items()) {
      out[key] = std::move(value);
    }
    return out;
  }

  json to_json(BigInt const& x) {
    if (x <= BigInt(INT64_MAX) && x >= BigInt(INT64_MIN)) {
      return static_cast<std::int64_t>(x);
    }
    return x.str();
  }

  json to_json(ElementStore const& s) {
    json elements = json::array();
    for (auto const& t : s) {
      elements.push_back(to_string(t));
    }
    return {{"degree", s.degree()}, {"size", s.size()}, {"elements", elements}};
  }

  json to_json(ClosureResult const& c, bool with_words) {
    json out = to_json(c.elements);
    json gens = json::array();
    for (auto const& g : c.generators) {
      gens.push_back(to_string(g));
    }
    out["generators"]      = gens;
    out["generator_count"] = c.generator_count;
    out["product_count"]   = c.product_count;
    if (with_words) {
      json words = json::array();
      for (std::size_t i = 0; i < c.elements.size(); ++i) {
        words.push_back(c.word(i));
      }
      out["words"] = words;
    }
    return out;
  }

  namespace {
    json strings(std::vector<Transformation> const& v) {
      json out = json::array();
      for (auto const& t : v) {
        out.push_back(to_string(t));
      }
      return out;
    }
  }  // namespace

  json to_json(RankCertificate const& r) {
    json out{{"rank", r.rank},
             {"witness", strings(r.witness)},
             {"mandatory", strings(r.mandatory)},
             {"search_exhaustive", r.search_exhaustive},
             {"lower_bound", r.lower_bound},
             {"upper_bound", r.upper_bound},
             {"product_count", r.product_count}};
    if (!r.note.empty()) {
      out["note"] = r.note;
    }
    return out;
  }

  json to_json(ClaimReport const& r, bool with_timing) {
    json out{{"claim_id", claim_name(r.claim)},
             {"n", r.n},
             {"params", r.params},
             {"status", status_name(r.status)},
             {"mode", r.mode},
             {"evidence", r.evidence}};
    if (!r.reason.empty()) {
      out["reason"] = r.reason;
    }
    if (r.status == ClaimStatus::FAIL) {
      out["counterexample"] = r.counterexample;
    }
    if (with_timing) {
      out["elapsed_seconds"] = r.elapsed.count();
    }
    return out;
  }

}  // namespace opzd
