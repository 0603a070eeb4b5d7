#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <optional>

#include "ringsum/classify.hpp"
#include "ringsum/closedform.hpp"
#include "ringsum/errors.hpp"
#include "ringsum/numtheory.hpp"
#include "ringsum/oracle.hpp"
#include "ringsum/realize.hpp"
#include "ringsum/search.hpp"

namespace ringsum::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Globals {
  unsigned jobs = 1;
  std::uint64_t max_elements = kDefaultMaxElements;
};

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

Json element_json(const FiniteAlgebra& a, const Element& e) {
  Json coords = Json::object();
  for (std::size_t j = 0; j < a.dimension(); ++j) coords[a.labels()[j]] = e.coords[j];
  return Json{{"coords", coords}, {"pretty", a.pretty(e)}};
}

Json symbolic_json(const FiniteAlgebra& a, const SymbolicValue& v) {
  Json j = element_json(a, evaluate(v, a));
  j["symbolic"] = v.describe();
  j["case_label"] = v.case_label;
  return j;
}

// ---- sum ------------------------------------------------------------------

struct SumArgs {
  std::string ring;
  std::uint64_t k = 0;
  std::string method = "composed";
};

int cmd_sum(const SumArgs& args, const Globals& g, std::ostream& out) {
  const RingSpec spec = parse_spec(args.ring);
  const FiniteAlgebra a = realize(spec);
  const bool want_all = args.method == "all";
  const LeafClassifier classifier = make_leaf_classifier(g.max_elements);

  Json record{{"spec", to_string(spec)}, {"k", args.k}, {"order", a.order()}};
  Json methods = Json::object();
  std::vector<std::pair<std::string, Element>> values;
  std::optional<std::string> unsupported;

  auto symbolic = [&](const std::string& name, auto compute) {
    if (!want_all && args.method != name) return;
    try {
      const SymbolicValue v = compute();
      methods[name] = symbolic_json(a, v);
      values.emplace_back(name, evaluate(v, a));
    } catch (const UnsupportedError& e) {
      if (!want_all) throw;
      methods[name] = Json{{"unsupported", e.what()}};
      unsupported = e.what();
    }
  };
  symbolic("composed", [&] { return composed_value(spec, args.k, classifier); });
  symbolic("paper", [&] { return paper_value(spec, args.k, classifier); });
  if (want_all || args.method == "brute") {
    if (args.k == 0) throw std::invalid_argument("power sums are defined for k >= 1");
    const Element s = brute_power_sum(a, args.k, {g.max_elements, g.jobs});
    methods["brute"] = element_json(a, s);
    values.emplace_back("brute", s);
  }
  record["methods"] = methods;

  Json agreement = Json::object();
  bool all_agree = true;
  bool mismatch = false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      const bool same = values[i].second == values[j].second;
      agreement[values[i].first + "_" + values[j].first] = same;
      all_agree = all_agree && same;
      const bool involves_paper = values[i].first == "paper" || values[j].first == "paper";
      if (!same && !involves_paper) mismatch = true;
    }
  }
  if (values.size() > 1) {
    record["agreement"] = agreement;
    record["agree"] = all_agree;
  }
  emit(out, record);
  return mismatch ? kMismatch : kOk;
}

// ---- classify -------------------------------------------------------------

int cmd_classify(const std::string& ring, const Globals& g, std::ostream& out) {
  const RingSpec spec = parse_spec(ring);
  if (!is_commutative(spec)) throw UnsupportedError(to_string(spec) + " is not commutative");
  const FiniteAlgebra a = realize(spec);
  Json record{{"spec", to_string(spec)}, {"order", a.order()}, {"characteristic", characteristic(a)}};
  Json comps = Json::array();
  bool field = a.order() > 1;
  for (const auto& c : decompose_spec(spec, make_leaf_classifier(g.max_elements))) {
    comps.push_back({{"p", c.p}, {"order", c.order()}, {"class", c.cls.to_string()}});
  }
  field = field && comps.size() == 1 && comps[0]["class"].get<std::string>().rfind("Field", 0) == 0;
  record["components"] = comps;
  record["field"] = field;
  if (as_prime_power(a.order()) && a.order() <= g.max_elements) {
    record["enumerated_class"] = classify_prime_power_algebra(a, g.max_elements).to_string();
    record["field_via_powersum"] = is_field_via_powersum(a, g.max_elements);
  }
  emit(out, record);
  return kOk;
}

// ---- irreducible ----------------------------------------------------------

int cmd_irreducible(std::uint64_t p, const std::string& poly, const Globals& g, std::ostream& out) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const Polynomial f = parse_polynomial(poly, p);
  const bool by_powersum = poly_irreducible_mod_p(p, f, g.max_elements);
  const bool by_division = is_irreducible_by_trial_division(f);
  emit(out, Json{{"p", p}, {"poly", to_string(f)}, {"irreducible", by_powersum}, {"trial_division", by_division}});
  return by_powersum == by_division ? kOk : kMismatch;
}

// ---- maximal --------------------------------------------------------------

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

int cmd_maximal(std::uint64_t p, const std::string& vars_text, const std::vector<std::string>& rule_texts,
                const Globals& g, std::ostream& out) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const auto vars = split(vars_text, ',');
  std::vector<RewriteRule> rules;
  for (const auto& t : rule_texts) rules.push_back(parse_rule(t, vars, p));
  check_rules(rules, vars.size());
  const MaximalityReport r = ideal_maximality(p, vars, rules, g.max_elements);
  emit(out, Json{{"p", p}, {"k", r.k}, {"maximal", r.maximal}, {"coords", r.coords}, {"basis", r.basis}});
  return kOk;
}

// ---- search ---------------------------------------------------------------

Json hit_json(const SelfPowerHit& h) {
  return Json{{"order", h.order},   {"target", h.target},         {"fields", h.field_sizes},
              {"ring", to_string(h.ring())}, {"facts", h.facts}, {"degenerate", h.degenerate}};
}

Json giuga_json(const GiugaReport& r) {
  Json j{{"order", r.order}, {"verdict", GiugaReport::to_string(r.verdict)}, {"prime_powers", r.prime_powers}};
  if (r.verdict == GiugaReport::Verdict::NonCandidate) {
    j["failing_prime"] = r.failing_prime;
    j["failing_condition"] = r.failing_condition;
  }
  j["witness"] = r.witness;
  return j;
}

struct SearchArgs {
  int target = 1;
  std::uint64_t max = 0;
  std::vector<std::uint64_t> check;
};

int cmd_selfpower(const SearchArgs& args, const Globals& g, std::ostream& out) {
  if (args.target != 1 && args.target != -1) throw std::invalid_argument("--target must be 1 or -1");
  for (auto m : args.check) {
    if (auto h = check_self_power(m, args.target)) {
      emit(out, hit_json(*h));
    } else {
      emit(out, Json{{"order", m}, {"target", args.target}, {"hit", false}});
    }
  }
  if (args.max) {
    for (const auto& h : search_self_power(args.target, args.max, {g.jobs})) emit(out, hit_json(h));
  }
  return kOk;
}

int cmd_giuga(const SearchArgs& args, const Globals& g, std::ostream& out, std::ostream& err) {
  for (auto m : args.check) emit(out, giuga_json(check_giuga_order(m)));
  if (args.max) {
    const auto found = search_giuga(args.max, {g.jobs});
    for (const auto& r : found) emit(out, giuga_json(r));
    err << "giuga: " << found.size() << " candidate(s) up to " << args.max << '\n';
  }
  return kOk;
}

// ---- verify ---------------------------------------------------------------

Json row_json(Family f, const DiscrepancyRow& r) {
  auto side = [&](const SymbolicValue* v, const std::vector<std::uint64_t>& coords, const std::string& pretty) {
    Json labeled = Json::object();
    for (std::size_t j = 0; j < coords.size(); ++j) labeled[r.labels[j]] = coords[j];
    Json j{{"coords", labeled}, {"pretty", pretty}};
    if (v) {
      j["symbolic"] = v->describe();
      j["case_label"] = v->case_label;
    }
    return j;
  };
  return Json{{"family", to_string(f)},
              {"spec", r.spec},
              {"k", r.k},
              {"paper", side(&r.paper, r.paper_coords, r.paper_pretty)},
              {"composed", side(&r.composed, r.composed_coords, r.composed_pretty)},
              {"oracle", side(nullptr, r.oracle_coords, r.oracle_pretty)}};
}

int cmd_verify(const std::string& which, const ScanBounds& bounds, std::ostream& out, std::ostream& err) {
  std::vector<Family> families;
  if (which == "all") {
    families = {Family::ZMod, Family::Gaussian, Family::Quadratic, Family::PolyQuot, Family::Matrix,
                Family::GaloisField};
  } else if (auto f = parse_family(which)) {
    families = {*f};
  } else {
    throw std::invalid_argument("unknown family '" + which + "'");
  }
  for (Family f : families) {
    std::size_t compared = 0;
    const auto rows = discrepancy_scan(f, bounds, [&](const DiscrepancyRow&) { ++compared; });
    for (const auto& r : rows) emit(out, row_json(f, r));
    err << to_string(f) << ": " << compared << " cases, " << rows.size() << " table discrepancies\n";
  }
  return kOk;
}

int report(std::ostream& err, int code, const std::string& kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power sums over finite commutative rings", "ringsum"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--max-elements", g.max_elements, "Enumeration bound")->envname("RINGSUM_MAX_ELEMENTS");

  SumArgs sum;
  auto* sum_cmd = app.add_subcommand("sum", "Compute S_k(R)");
  sum_cmd->add_option("--ring", sum.ring, "Ring spec")->required();
  sum_cmd->add_option("--k", sum.k, "Exponent")->required();
  sum_cmd->add_option("--method", sum.method, "composed|paper|brute|all")
      ->check(CLI::IsMember({"composed", "paper", "brute", "all"}));

  std::string classify_ring;
  auto* classify_cmd = app.add_subcommand("classify", "Component structure of a ring");
  classify_cmd->add_option("--ring", classify_ring, "Ring spec")->required();

  std::uint64_t irr_p = 0;
  std::string irr_poly;
  auto* irr_cmd = app.add_subcommand("irreducible", "Irreducibility over Z/pZ via power sums");
  irr_cmd->add_option("--p", irr_p, "Prime")->required();
  irr_cmd->add_option("--poly", irr_poly, "Monic polynomial in x")->required();

  std::uint64_t max_p = 0;
  std::string max_vars;
  std::vector<std::string> max_rules;
  auto* max_cmd = app.add_subcommand("maximal", "Maximality of an ideal of Z/pZ[vars]");
  max_cmd->add_option("--p", max_p, "Prime")->required();
  max_cmd->add_option("--vars", max_vars, "Comma-separated variables")->required();
  max_cmd->add_option("--rule", max_rules, "Rewrite rule v^e=poly, one per variable")->required();

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Order searches");
  search_cmd->require_subcommand(1);
  auto* selfpower_cmd = search_cmd->add_subcommand("selfpower", "Orders with S_|R|(R) = target");
  selfpower_cmd->add_option("--target", search.target, "1 or -1")->check(CLI::IsMember({1, -1}));
  selfpower_cmd->add_option("--max", search.max, "Largest order searched");
  selfpower_cmd->add_option("--check", search.check, "Orders to test individually");
  auto* giuga_cmd = search_cmd->add_subcommand("giuga", "Generalized Giuga conditions");
  giuga_cmd->add_option("--max", search.max, "Largest order searched");
  giuga_cmd->add_option("--check", search.check, "Orders to test individually");

  std::string family;
  ScanBounds bounds;
  auto* verify_cmd = app.add_subcommand("verify", "Closed forms against enumeration");
  verify_cmd->add_option("family", family, "zmod|gaussian|quadratic|polyquot|matrix|gf|all")
      ->required()
      ->check(CLI::IsMember({"zmod", "gaussian", "quadratic", "polyquot", "matrix", "gf", "all"}));
  verify_cmd->add_option("--max-n", bounds.max_n, "Largest modulus (family default when 0)");
  verify_cmd->add_option("--max-k", bounds.max_k, "Largest exponent (family default when 0)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    return report(err, kParse, "usage", e.what());
  }

  try {
    if (*sum_cmd) return cmd_sum(sum, g, out);
    if (*classify_cmd) return cmd_classify(classify_ring, g, out);
    if (*irr_cmd) return cmd_irreducible(irr_p, irr_poly, g, out);
    if (*max_cmd) return cmd_maximal(max_p, max_vars, max_rules, g, out);
    if (*selfpower_cmd) return cmd_selfpower(search, g, out);
    if (*giuga_cmd) return cmd_giuga(search, g, out, err);
    if (*verify_cmd) {
      bounds.jobs = g.jobs;
      bounds.max_elements = std::min<std::uint64_t>(g.max_elements, bounds.max_elements);
      return cmd_verify(family, bounds, out, err);
    }
  } catch (const ParseError& e) {
    return report(err, kParse, "parse", e.what());
  } catch (const UnsupportedError& e) {
    return report(err, kUnsupported, "unsupported", e.what());
  } catch (const ResourceError& e) {
    return report(err, kResource, "resource", e.what());
  } catch (const MismatchError& e) {
    return report(err, kMismatch, "mismatch", e.what());
  } catch (const std::invalid_argument& e) {
    return report(err, kParse, "invalid", e.what());
  }
  return kParse;
}

}  // namespace ringsum::cli
