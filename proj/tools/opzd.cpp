// opzd: command-line front end for the order-preserving zero-divisor library.
//
// Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.

#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "opzd/claims.hpp"
#include "opzd/engine.hpp"
#include "opzd/enumeration.hpp"
#include "opzd/families.hpp"
#include "opzd/report_json.hpp"
#include "opzd/zero_divisor_graph.hpp"

namespace {

  using json = nlohmann::json;
  using namespace opzd;

  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  struct Options {
    std::size_t n = 0;
    std::string k;  // number, or "n"
    std::string set;
    std::string y;
    std::string method = "formula";
    std::string gens;
    std::string family;
    std::string element;
    std::string claim;
    std::string out;
    bool        exact   = false;
    bool        as_json = false;
    bool        all     = false;
    bool        small_n = false;
    bool        timing  = false;
    std::size_t cap     = kEnumerationCap;
    std::uint64_t budget = SearchBudget{}.max_products;
  };

  std::vector<Point> parse_points(std::string const& text) {
    std::vector<Point> out;
    std::stringstream  in(text);
    std::string        item;
    while (std::getline(in, item, ',')) {
      if (item.empty()) continue;
      try {
        std::size_t used = 0;
        auto        v    = std::stoul(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        out.push_back(v);
      } catch (std::exception const&) {
        throw UsageError("bad point in --y: " + item);
      }
    }
    return out;
  }

  Point parse_k(std::string const& text, std::size_t n) {
    if (text == "n") return n;
    try {
      std::size_t used = 0;
      auto        v    = std::stoul(text, &used);
      if (used == text.size()) return v;
    } catch (std::exception const&) {
    }
    throw UsageError("bad --k: " + text);
  }

  // on, ion, ony, l, r, z, r1star, z1star, plus l2, z1, rn style shorthands.
  SemigroupId parse_set(Options const& o) {
    if (o.set.empty()) throw UsageError("--set is required");
    if (o.n == 0) throw UsageError("--n is required");
    std::string s;
    for (char ch : o.set) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    auto kind = parse_set_kind(s);
    std::string k = o.k;
    if (!kind && s.size() > 1 && (s[0] == 'l' || s[0] == 'r' || s[0] == 'z')) {
      kind = parse_set_kind(s.substr(0, 1));
      if (!k.empty() && k != s.substr(1)) throw UsageError("--set and --k disagree");
      k = s.substr(1);
    }
    if (!kind) throw UsageError("unknown --set: " + o.set);
    SemigroupId id;
    switch (*kind) {
      case SetKind::O: id = SemigroupId::O(o.n); break;
      case SetKind::IO: id = SemigroupId::IO(o.n); break;
      case SetKind::O_Y:
        if (o.y.empty()) throw UsageError("--set ony needs --y");
        id = SemigroupId::O_Y(o.n, parse_points(o.y));
        break;
      case SetKind::L:
      case SetKind::R:
      case SetKind::Z: {
        if (k.empty()) throw UsageError("--set " + o.set + " needs --k");
        auto kk = parse_k(k, o.n);
        id = *kind == SetKind::L ? SemigroupId::L(o.n, kk)
             : *kind == SetKind::R ? SemigroupId::R(o.n, kk)
                                   : SemigroupId::Z(o.n, kk);
        break;
      }
      case SetKind::R1_STAR: id = SemigroupId::R1_star(o.n); break;
      case SetKind::Z1_STAR: id = SemigroupId::Z1_star(o.n); break;
    }
    try {
      id.validate();
    } catch (std::exception const& e) {
      throw UsageError(e.what());
    }
    return id;
  }

  std::vector<Transformation> parse_generators(Options const& o) {
    std::vector<Transformation> gens;
    if (!o.family.empty()) {
      if (o.n == 0) throw UsageError("--family needs --n");
      auto f = parse_family_id(o.family);
      if (!f) throw UsageError("unknown --family: " + o.family);
      gens = *f == FamilyName::G ? family_G(o.n).elements : family(*f, o.n).elements;
    }
    if (!o.gens.empty()) {
      std::stringstream in(o.gens);
      std::string       item;
      while (std::getline(in, item, ';')) {
        if (item.find_first_not_of(" ") == std::string::npos) continue;
        try {
          gens.push_back(parse_transformation(item));
        } catch (std::exception const& e) {
          throw UsageError(std::string("bad --gens entry: ") + e.what());
        }
      }
    }
    return gens;
  }

  std::string join(std::vector<Transformation> const& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i ? ", " : "") + to_string(v[i]);
    }
    return out + "}";
  }

  json id_json(SemigroupId const& id) {
    json j{{"set", id.cli_name()}, {"n", id.n}, {"name", id.describe()}};
    if (id.kind == SetKind::L || id.kind == SetKind::R || id.kind == SetKind::Z) j["k"] = id.k;
    if (id.kind == SetKind::O_Y) j["y"] = id.y;
    return j;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Verbs; each writes to out and returns the exit status.
  ////////////////////////////////////////////////////////////////////////////

  int run_count(Options const& o, std::ostream& out) {
    auto   id = parse_set(o);
    BigInt value;
    if (o.method == "formula") {
      try {
        value = card(id);
      } catch (std::invalid_argument const&) {
        throw UsageError("no closed form for " + id.describe() + "; use --method enumerate");
      }
    } else if (o.method == "enumerate") {
      value = enumerate(id, o.cap).size();
    } else {
      throw UsageError("--method must be formula or enumerate");
    }
    if (o.as_json) {
      auto j      = id_json(id);
      j["method"] = o.method;
      j["count"]  = to_json(value);
      out << envelope("count", j).dump(2) << "\n";
    } else {
      out << value << "\n";
    }
    return 0;
  }

  int run_enumerate(Options const& o, std::ostream& out) {
    auto id = parse_set(o);
    auto s  = enumerate(id, o.cap);
    if (o.as_json) {
      auto j = id_json(id);
      j.update(to_json(s));
      out << envelope("enumerate", j).dump(2) << "\n";
    } else {
      for (auto const& t : s) out << to_string(t) << "\n";
    }
    return 0;
  }

  int run_member(Options const& o, std::ostream& out) {
    if (o.element.empty()) throw UsageError("--element is required");
    Transformation a;
    try {
      a = parse_transformation(o.element);
    } catch (std::exception const& e) {
      throw UsageError(std::string("bad --element: ") + e.what());
    }
    Options oo = o;
    if (oo.n == 0) oo.n = a.degree();
    if (oo.n != a.degree()) throw UsageError("--element degree differs from --n");
    auto id = parse_set(oo);
    bool in = contains(id, a);
    if (o.as_json) {
      auto j       = id_json(id);
      j["element"] = to_string(a);
      j["member"]  = in;
      out << envelope("member", j).dump(2) << "\n";
    } else {
      out << (in ? "true" : "false") << "\n";
    }
    return 0;
  }

  int run_closure(Options const& o, std::ostream& out) {
    auto gens = parse_generators(o);
    if (gens.empty()) throw UsageError("closure needs --gens or --family");
    auto c = [&] {
      try {
        return closure(gens);
      } catch (std::invalid_argument const& e) {
        throw UsageError(e.what());
      }
    }();
    json j;
    if (!o.set.empty()) {
      Options oo = o;
      if (oo.n == 0) oo.n = c.elements.degree();
      auto id     = parse_set(oo);
      bool equal  = c.elements.same_set(enumerate(id, o.cap));
      j["target"] = id_json(id);
      j["generates_target"] = equal;
    }
    if (o.as_json) {
      j.update(to_json(c));
      out << envelope("closure", j).dump(2) << "\n";
    } else {
      out << c.elements.size() << "\n";
      for (auto const& t : c.elements) out << to_string(t) << "\n";
      if (j.contains("generates_target")) {
        out << "generates " << j["target"]["name"].get<std::string>() << ": "
            << (j["generates_target"].get<bool>() ? "true" : "false") << "\n";
      }
    }
    return 0;
  }

  int run_rank(Options const& o, std::ostream& out) {
    auto id = parse_set(o);
    if (!o.exact) {
      BigInt r;
      try {
        r = rank_formula(id);
      } catch (std::domain_error const& e) {
        throw UsageError(std::string(e.what()) + "; use --exact");
      }
      if (o.as_json) {
        auto j      = id_json(id);
        j["method"] = "formula";
        j["rank"]   = to_json(r);
        out << envelope("rank", j).dump(2) << "\n";
      } else {
        out << r << "\n";
      }
      return 0;
    }
    auto s = enumerate(id, o.cap);
    if (!is_subsemigroup(s)) throw UsageError(id.describe() + " is not a semigroup");
    SearchBudget budget;
    budget.max_products = o.budget;
    auto known          = parse_generators(o);
    auto cert           = rank_exact(s, budget, known);
    if (o.as_json) {
      auto j      = id_json(id);
      j["method"] = "exact";
      j.update(to_json(cert));
      out << envelope("rank", j).dump(2) << "\n";
    } else if (cert.search_exhaustive) {
      out << cert.rank << "\n";
      out << "witness: " << join(cert.witness) << "\n";
    } else {
      out << cert.lower_bound << ".." << cert.upper_bound << "\n";
      out << "bounds only: " << cert.note << "\n";
      out << "generating set: " << join(cert.witness) << "\n";
    }
    return 0;
  }

  int run_verify(Options const& o, std::ostream& out) {
    if (o.n == 0) throw UsageError("--n is required");
    ClaimParams params;
    params.small_n              = o.small_n;
    params.budget.max_products  = o.budget;
    if (!o.y.empty()) params.y_sets.push_back(parse_points(o.y));
    std::vector<ClaimReport> reports;
    if (o.all) {
      if (!o.claim.empty()) throw UsageError("--all and --claim are exclusive");
      reports = verify_all(o.n, params);
    } else {
      if (o.claim.empty()) throw UsageError("verify needs --claim or --all");
      auto id = parse_claim(o.claim);
      if (!id) throw UsageError("unknown --claim: " + o.claim);
      reports.push_back(verify(*id, o.n, params));
    }
    bool const ok = all_passed(reports);
    if (o.as_json) {
      json arr = json::array();
      for (auto const& r : reports) arr.push_back(to_json(r, o.timing));
      out << envelope("verify", json{{"n", o.n}, {"passed", ok}, {"reports", arr}}).dump(2) << "\n";
    } else {
      for (auto const& r : reports) {
        out << std::left << std::setw(18) << claim_name(r.claim) << " n=" << r.n << "  "
            << std::setw(8) << status_name(r.status) << std::setw(12) << r.mode;
        if (!r.reason.empty()) out << r.reason;
        if (r.status == ClaimStatus::FAIL && !r.counterexample.is_null()) {
          out << "  counterexample: " << r.counterexample.dump();
        }
        if (o.timing) out << "  (" << r.elapsed.count() << " s)";
        out << "\n";
      }
    }
    return ok ? 0 : 1;
  }

  int run_export_graph(Options const& o, std::ostream& out) {
    if (o.n == 0) throw UsageError("--n is required");
    if (o.k.empty()) throw UsageError("--k is required");
    auto k = parse_k(o.k, o.n);
    if (k < 1 || k > o.n) throw UsageError("--k outside 1..n");
    if (o.n > o.cap) throw UsageError("--n exceeds the enumeration cap");
    out << to_dot(zero_divisor_graph(o.n, k));
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order-preserving transformations and zero-divisors of constant maps"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Degree of the chain")->check(CLI::Range(1, 255));
    sub->add_option("--out", o.out, "Write output to FILE");
    sub->add_flag("--json", o.as_json, "JSON output");
    sub->add_option("--cap", o.cap, "Largest n to enumerate");
  };
  auto set_opts = [&](CLI::App* sub) {
    sub->add_option("--set", o.set, "on, ion, ony, l, r, z, r1star, z1star (or l2, z1, rn, ...)");
    sub->add_option("--k", o.k, "Index k of pi_k (number or n)");
    sub->add_option("--y", o.y, "Comma list for O_n(Y)");
  };

  auto* count = app.add_subcommand("count", "Cardinality of a set");
  common(count);
  set_opts(count);
  count->add_option("--method", o.method, "formula | enumerate")
      ->check(CLI::IsMember({"formula", "enumerate"}));

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the elements of a set");
  common(enumerate_cmd);
  set_opts(enumerate_cmd);

  auto* member = app.add_subcommand("member", "Membership of one transformation");
  common(member);
  set_opts(member);
  member->add_option("--element", o.element, "Image word, e.g. [1,1,2]");

  auto* closure_cmd = app.add_subcommand("closure", "Semigroup generated by a set");
  common(closure_cmd);
  set_opts(closure_cmd);
  closure_cmd->add_option("--gens", o.gens, "Semicolon-separated image words");
  closure_cmd->add_option("--family", o.family, "Named generator family");

  auto* rank = app.add_subcommand("rank", "Rank of a semigroup");
  common(rank);
  set_opts(rank);
  rank->add_flag("--exact", o.exact, "Search instead of the closed form");
  rank->add_option("--budget", o.budget, "Compositions per search branch");
  rank->add_option("--gens", o.gens, "Known generating set for the bounds");
  rank->add_option("--family", o.family, "Known generating family for the bounds");

  auto* verify_cmd = app.add_subcommand("verify", "Check the stated results at degree n");
  common(verify_cmd);
  verify_cmd->add_option("--claim", o.claim, "Claim id, e.g. lemma_1");
  verify_cmd->add_flag("--all", o.all, "Every claim");
  verify_cmd->add_flag("--small-n", o.small_n, "Small-degree statements of rank claims");
  verify_cmd->add_option("--y", o.y, "Comma list Y for THEOREM_5");
  verify_cmd->add_option("--budget", o.budget, "Compositions per search branch");
  verify_cmd->add_flag("--timing", o.timing, "Report elapsed time");

  auto* graph = app.add_subcommand("export-graph", "Zero-divisor graph of pi_k as DOT");
  common(graph);
  graph->add_option("--k", o.k, "Index k of pi_k");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ostringstream buffer;
  int                status = 0;
  try {
    if (*count) status = run_count(o, buffer);
    else if (*enumerate_cmd) status = run_enumerate(o, buffer);
    else if (*member) status = run_member(o, buffer);
    else if (*closure_cmd) status = run_closure(o, buffer);
    else if (*rank) status = run_rank(o, buffer);
    else if (*verify_cmd) status = run_verify(o, buffer);
    else if (*graph) status = run_export_graph(o, buffer);
  } catch (UsageError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (std::invalid_argument const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (std::out_of_range const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (std::domain_error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (o.out.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream file(o.out);
    if (!file) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 2;
    }
    file << buffer.str();
  }
  return status;
}
