#include "commands.hpp"

#include <fstream>
#include <sstream>

#include "gwtower/error.hpp"
#include "gwtower/generation.hpp"
#include "gwtower/normal_structure.hpp"
#include "gwtower/schur.hpp"
#include "gwtower/spec_io.hpp"
#include "gwtower/tower.hpp"

namespace gwt::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read spec file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<std::string, std::string> split_arg(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw InvalidInput("group '" + text + "': expected family:parameter");
  }
  return {text.substr(0, colon), text.substr(colon + 1)};
}

std::uint64_t to_u64_arg(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    auto v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InvalidInput(what + ": expected a non-negative integer, got '" + s + "'");
  }
}

struct Context {
  const Options& opts;
  Report& report;
  std::string spec_text;

  TowerSpec spec() {
    if (opts.spec_text.empty() && opts.spec_path.empty()) {
      throw InvalidInput(opts.command + " needs --spec");
    }
    spec_text = opts.spec_text.empty() ? read_file(opts.spec_path) : opts.spec_text;
    TowerSpec s = parse_tower_spec(spec_text);
    if (opts.horizon > 0) {
      s.horizon = opts.horizon;
      s.validate();
    }
    Json lines = Json::array();
    std::istringstream in(format_tower_spec(s));
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    report.inputs["spec"] = std::move(lines);
    return s;
  }
};

std::string holds(bool b) { return b ? "holds" : "fails"; }

Json level_entry(const TowerSpec& spec, std::size_t k) {
  Json j = Json::object();
  j["level"] = k;
  j["group"] = spec.group_at(k).name();
  j["action"] = k == 1 ? "natural" : std::string(to_string(spec.action_at(k)));
  return j;
}

void cmd_build(Context& c) {
  TowerSpec spec = c.spec();
  const std::size_t level = c.opts.level ? c.opts.level : spec.horizon;
  c.report.inputs["level"] = level;
  TowerSpec upto = spec;
  upto.horizon = level;
  upto.validate();
  auto degrees = tower_degrees(upto);
  for (std::size_t k = 1; k <= level; ++k) {
    Json e = level_entry(spec, k);
    e["degree"] = big_number_json(degrees[k - 1]);
    e["order"] = big_number_json(tower_order(upto, k));
    c.report.add_evidence(std::move(e));
  }
  BigNumber formula = tower_order(upto, level);
  try {
    TowerLevel built = build_tower_level(spec, level, c.opts.budgets);
    const auto& chain = built.group.chain();
    Json e = Json::object();
    e["certified_order"] = big_json(built.group.order());
    e["degree"] = built.group.degree();
    e["base_length"] = chain.base().size();
    e["orbit_lengths"] = chain.orbit_lengths();
    e["strong_generators"] = chain.strong_generators().size();
    c.report.add_evidence(std::move(e));
    const bool order_ok = formula.is_explicit() && formula.value() == built.group.order();
    const bool degree_ok =
        degrees.back().is_explicit() && degrees.back().value() == built.group.degree();
    c.report.verdict("order_law", holds(order_ok),
                     "certified chain order " + std::string(order_ok ? "equals" : "differs from") +
                         " the wreath-product order formula");
    c.report.verdict("degree_law", holds(degree_ok));
  } catch (const BudgetExceeded& e) {
    c.report.verdict("order_law", "symbolic", e.what());
  }
}

void cmd_verify_lemma(Context& c) {
  const auto& o = c.opts;
  if (o.a.empty() || o.b.empty()) throw InvalidInput("verify-lemma needs --a and --b");
  ActionKind action = parse_action(o.action);
  c.report.inputs["a"] = o.a;
  c.report.inputs["b"] = o.b;
  c.report.inputs["action"] = to_string(action);
  auto rep = check_lemma_minnorm(parse_group_arg(o.a), parse_group_arg(o.b), action, o.budgets);
  Json e = Json::object();
  e["group_order"] = big_json(rep.group_order);
  e["base_order"] = big_json(rep.base_order);
  e["a_simple"] = rep.a_simple;
  e["a_abelian"] = rep.a_abelian;
  e["b_transitive"] = rep.b_transitive;
  Json mins = Json::array();
  for (const auto& m : rep.minimal_normals) {
    mins.push_back({{"order", big_json(m.order)}, {"generators", m.generators}});
  }
  e["minimal_normal_subgroups"] = std::move(mins);
  c.report.add_evidence(std::move(e));
  c.report.verdict("minimal_normal_count", std::to_string(rep.minimal_normals.size()));
  c.report.verdict("base_is_unique_minimal_normal", holds(rep.base_is_unique_minimal));
  c.report.verdict("base_is_minimal_normal", holds(rep.base_is_minimal));
  c.report.verdict("agrees_with_prediction", holds(rep.agrees_with_prediction),
                   std::string("prediction from A simple and B transitive: ") +
                       (rep.predicted_unique_base ? "unique" : "not unique"));
  c.report.verdict("abelian_edge_case", rep.abelian_edge_case ? "flagged" : "not_flagged",
                   rep.abelian_edge_case
                       ? "A is simple but abelian; the prediction does not apply"
                       : "");
}

void cmd_verify_kernel(Context& c) {
  TowerSpec spec = c.spec();
  const std::size_t k = c.opts.level ? c.opts.level : 1;
  c.report.inputs["k"] = k;
  auto rep = kernel_chain_check(spec, k, c.opts.budgets);
  Json e = Json::object();
  e["upper_order"] = big_json(rep.upper_order);
  e["lower_order"] = big_json(rep.lower_order);
  e["expected_kernel_order"] = big_json(rep.expected_kernel_order);
  e["kernel_order"] = big_json(rep.kernel_order);
  e["image_order"] = big_json(rep.image_order);
  e["closure_order"] = big_json(rep.closure_order);
  e["coordinates"] = rep.coordinates;
  c.report.add_evidence(std::move(e));
  c.report.verdict("kernel_order", holds(rep.kernel_order == rep.expected_kernel_order));
  c.report.verdict("kernel_is_normal_closure", holds(rep.closure_equals_kernel));
  c.report.verdict("projection_exact", holds(rep.kernel_projects_trivially &&
                                              rep.projection_surjective && rep.orders_multiply));
  c.report.verdict("coordinate_factors", holds(rep.coordinate_factors_ok));
  c.report.verdict("kernel_unique_minimal_normal",
                   rep.unique_minimal == CheckStatus::Verified  ? "holds"
                   : rep.unique_minimal == CheckStatus::Failed ? "fails"
                                                               : "skipped",
                   rep.skip_reason);
  c.report.verdict("kernel_chain", holds(rep.holds()));
}

void cmd_eulerian(Context& c) {
  const auto& o = c.opts;
  if (o.group.empty()) throw InvalidInput("eulerian needs --group");
  c.report.inputs["group"] = o.group;
  c.report.inputs["d"] = o.d;
  PermGroup g = parse_group_arg(o.group);
  Json e = Json::object();
  e["group_order"] = big_json(g.order());
  if (o.trials == 0) {
    BigInt count = eulerian_count(g, o.d, o.budgets, o.workers);
    BigInt total = big_pow(g.order(), o.d);
    BigInt gcd;
    mpz_gcd(gcd.get_mpz_t(), count.get_mpz_t(), total.get_mpz_t());
    e["count"] = big_json(count);
    e["tuples"] = big_json(total);
    e["probability"] = BigInt(count / gcd).get_str() + "/" + BigInt(total / gcd).get_str();
    c.report.verdict("eulerian_count", "exact", count.get_str());
    if (auto s = simple_group_arg(o.group)) {
      BigInt aut = aut_order(*s);
      e["aut_order"] = big_json(aut);
      BigInt hall = count / aut;
      e["hall_power_bound"] = big_json(hall);
      c.report.verdict("hall_power_bound", "exact", hall.get_str());
    }
  } else {
    c.report.inputs["trials"] = o.trials;
    auto est = generation_probability_mc(g, o.d, o.trials, o.seed, o.workers);
    e["probability"] = est.probability;
    e["half_width"] = est.half_width;
    e["confidence"] = est.confidence;
    e["trials"] = est.trials;
    e["successes"] = est.successes;
    e["seed"] = est.seed;
    std::ostringstream ci;
    ci.precision(6);
    ci << "[" << est.probability - est.half_width << ", " << est.probability + est.half_width
       << "] at 99%";
    c.report.verdict("generation_probability", "estimated", ci.str());
  }
  c.report.add_evidence(std::move(e));
}

void inject_phi(const Options& o, EulerianTable& table) {
  for (const auto& entry : o.phi_values) {
    auto eq = entry.find('=');
    auto c1 = entry.find(':');
    auto c2 = c1 == std::string::npos ? c1 : entry.find(':', c1 + 1);
    if (eq == std::string::npos || c2 == std::string::npos || c2 > eq) {
      throw InvalidInput("--phi '" + entry + "': expected family:parameter:d=value");
    }
    SimpleGroupId s = parse_simple_group(entry.substr(0, c1), entry.substr(c1 + 1, c2 - c1 - 1));
    auto d = static_cast<unsigned>(to_u64_arg(entry.substr(c2 + 1, eq - c2 - 1), "--phi d"));
    BigInt value;
    if (value.set_str(entry.substr(eq + 1), 10) != 0) {
      throw InvalidInput("--phi '" + entry + "': value is not a decimal integer");
    }
    if (o.phi_citation.empty()) throw InvalidInput("--phi values need --phi-citation");
    table.inject(s, d, value, o.phi_citation);
  }
}

void cmd_certify_lower_rank(Context& c) {
  TowerSpec spec = c.spec();
  const auto& o = c.opts;
  c.report.inputs["r"] = o.r;
  c.report.inputs["levels"] = spec.horizon;
  if (!o.phi_values.empty()) {
    c.report.inputs["phi"] = o.phi_values;
    c.report.inputs["phi_citation"] = o.phi_citation;
  }
  EulerianTable table(o.budgets, o.workers);
  inject_phi(o, table);
  auto cert = lower_rank_certificate(spec, o.r, spec.horizon, table);
  for (const auto& l : cert.levels) {
    Json e = Json::object();
    e["n"] = l.n;
    e["group"] = l.group.name();
    e["previous_degree"] = big_number_json(l.previous_degree);
    e["phi"] = l.phi ? big_json(*l.phi) : Json();
    e["phi_source"] = l.phi_source;
    e["aut_order"] = big_json(l.aut);
    e["hall_capacity"] = l.hall_capacity ? big_json(*l.hall_capacity) : Json();
    c.report.add_evidence(std::move(e));
    c.report.verdict("level " + std::to_string(l.n), std::string(to_string(l.verdict)));
  }
  for (const auto& s : cert.recurrence) {
    c.report.verdict("recurrence " + std::to_string(s.previous) + " -> " + std::to_string(s.next),
                     s.holds ? (s.equality ? "holds_with_equality" : "holds") : "fails",
                     "bound " + s.bound_string());
  }
  std::string overall = cert.fails_count      ? "fails"
                        : cert.undecidable_count ? "undecidable"
                                                 : "holds";
  c.report.verdict("finite_horizon", overall, cert.conclusion);
}

void cmd_certify_not_fp(Context& c) {
  TowerSpec spec = c.spec();
  c.report.inputs["horizon"] = spec.horizon;
  auto cert = fp_obstruction(spec, spec.horizon);
  for (const auto& l : cert.per_level) {
    Json e = Json::object();
    e["n"] = l.n;
    e["multiplier"] = l.multiplier.to_string();
    e["d"] = l.d;
    e["relation_lower_bound"] = "r >= " + std::to_string(l.d);
    c.report.add_evidence(std::move(e));
  }
  c.report.verdict("prime_recurs", std::string(to_string(cert.hypothesis.status)),
                   cert.hypothesis.reason);
  c.report.verdict("growth_within_horizon", holds(cert.growth_within_horizon));
  c.report.verdict("unbounded_within_horizon", holds(cert.unbounded_within_horizon));
  c.report.verdict("not_finitely_presentable", cert.obstruction_flagged ? "flagged" : "not_flagged",
                   cert.reason);
}

void cmd_growth_check(Context& c) {
  std::vector<std::uint64_t> primes = c.opts.primes;
  if (primes.empty()) {
    TowerSpec spec = c.spec();
    for (std::size_t k = 1; k <= spec.horizon; ++k) {
      const auto& s = spec.group_at(k);
      if (s.family() != SimpleFamily::PSL2) {
        throw InvalidInput("growth-check applies to PSL2 sequences; level " + std::to_string(k) +
                           " is " + s.name());
      }
      primes.push_back(s.parameter());
    }
  }
  c.report.inputs["primes"] = primes;
  for (const auto& s : remark_growth_check(primes)) {
    Json e = Json::object();
    e["previous"] = s.previous;
    e["next"] = s.next;
    e["bound"] = s.bound_string();
    c.report.add_evidence(std::move(e));
    c.report.verdict(std::to_string(s.previous) + " -> " + std::to_string(s.next),
                     s.holds ? (s.equality ? "holds_with_equality" : "holds") : "fails",
                     "bound " + s.bound_string());
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "build", "verify-lemma", "verify-kernel", "eulerian",
      "certify-lower-rank", "certify-not-fp", "growth-check"};
  return names;
}

PermGroup parse_group_arg(const std::string& text) {
  auto [family, param] = split_arg(text);
  const std::uint64_t n = to_u64_arg(param, "group '" + text + "' parameter");
  if (family == "alt") return alt_group(n);
  if (family == "sym") return sym_group(n);
  if (family == "cyclic") return cyclic_group(n);
  if (family == "psl2") return psl2_group(n);
  if (family == "sl2") return sl2_group(n);
  if (family == "trivial") {
    if (n == 0) throw InvalidInput("trivial group needs at least one point");
    return PermGroup::trivial(n);
  }
  throw InvalidInput("group '" + text + "': unknown family '" + family +
                     "' (expected alt, sym, cyclic, psl2, sl2 or trivial)");
}

std::optional<SimpleGroupId> simple_group_arg(const std::string& text) {
  auto [family, param] = split_arg(text);
  const std::uint64_t n = to_u64_arg(param, "parameter");
  if (family == "alt" && n >= 5) return SimpleGroupId::alt(n);
  if (family == "psl2") return SimpleGroupId::psl2(n);
  return std::nullopt;
}

Report run_command(const Options& opts) {
  Report report;
  report.manifest.command = opts.command;
  report.manifest.argv = opts.argv;
  report.manifest.seed = opts.seed;
  report.manifest.budgets = opts.budgets;
  Context c{opts, report, {}};
  try {
    if (opts.command == "build") {
      cmd_build(c);
    } else if (opts.command == "verify-lemma") {
      cmd_verify_lemma(c);
    } else if (opts.command == "verify-kernel") {
      cmd_verify_kernel(c);
    } else if (opts.command == "eulerian") {
      cmd_eulerian(c);
    } else if (opts.command == "certify-lower-rank") {
      cmd_certify_lower_rank(c);
    } else if (opts.command == "certify-not-fp") {
      cmd_certify_not_fp(c);
    } else if (opts.command == "growth-check") {
      cmd_growth_check(c);
    } else {
      throw InvalidInput("unknown command '" + opts.command + "'");
    }
  } catch (const Error& e) {
    report.error = {{"kind", e.kind()}, {"message", e.what()}};
  } catch (const std::exception& e) {
    report.error = {{"kind", "internal"}, {"message", e.what()}};
  }
  report.manifest.input_digest =
      "fnv1a64:" + fnv1a64_hex(c.spec_text.empty() ? report.inputs.dump() : c.spec_text);
  return report;
}

int exit_code(const Report& r) {
  if (r.error.is_null()) return kExitOk;
  const auto kind = r.error.value("kind", "");
  if (kind == "invalid_input") return kExitInvalidInput;
  if (kind == "budget_exceeded") return kExitBudget;
  return kExitInternal;
}

}  // namespace gwt::cli
