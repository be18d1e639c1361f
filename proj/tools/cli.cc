#include "cli.h"

#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "superhedge/casebook.h"
#include "superhedge/dual.h"
#include "superhedge/json_io.h"
#include "superhedge/polar.h"
#include "superhedge/primal.h"
#include "superhedge/report.h"
#include "superhedge/semistatic.h"

namespace superhedge::cli {
namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string market_path;
  std::string payoff_path;
  std::string target = "omega-star";
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  bool with_options = false;
  std::optional<std::size_t> cap;

  // gen
  std::string kind;
  std::string payoff_name;
  bool golden = false;
  std::string u = "2", d = "1/2", factors = "1/2,1,2";
  std::optional<std::string> s0;
  std::string k0 = "2", k1 = "25", c1 = "1/10", grid;
  std::size_t steps = 1, assets = 1, branching = 3, max_paths = 40;
  bool arbitrage_free = true;
};

RationalVector parse_list(const std::string& text) {
  RationalVector out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) out.push_back(parse_rational(item));
  return out;
}

// Flattens a report into dotted-key / scalar-value pairs.
void flatten(const json& node, const std::string& key,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (node.is_object()) {
    if (node.empty()) rows.emplace_back(key, "{}");
    for (const auto& [k, v] : node.items()) {
      flatten(v, key.empty() ? k : key + "." + k, rows);
    }
  } else if (node.is_array()) {
    if (node.empty()) rows.emplace_back(key, "[]");
    for (std::size_t i = 0; i < node.size(); ++i) {
      flatten(node[i], key + "[" + std::to_string(i) + "]", rows);
    }
  } else if (node.is_string()) {
    rows.emplace_back(key, node.get<std::string>());
  } else {
    rows.emplace_back(key, node.dump());
  }
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string render(const std::string& report, const std::string& format) {
  if (format == "json") return report;
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(json::parse(report), "", rows);
  std::string text = format == "csv" ? "key,value\n" : "";
  for (const auto& [k, v] : rows) {
    text += format == "csv" ? csv_field(k) + "," + csv_field(v) + "\n"
                            : k + ": " + v + "\n";
  }
  return text;
}

Market load_market_file(const Options& o) {
  return load_market(read_file(o.market_path));
}

PathSet hedge_set(const Market& market, const std::string& target) {
  if (target == "all") return PathSet::all(market.num_paths());
  if (target == "omega-phi") return compute_omega_phi(market).omega_star;
  return compute_omega_star(market).omega_star;
}

Payoff claim_for(const Market& market, const Options& o) {
  if (!o.payoff_path.empty()) return load_payoff(read_file(o.payoff_path), market);
  return gen_random_payoff(o.seed.value_or(0), market.num_paths());
}

std::string cmd_support(const Options& o, bool with_options) {
  const Market market = load_market_file(o);
  const SupportReport support =
      with_options ? compute_omega_phi(market) : compute_omega_star(market);
  return support_report(market, support, classify(market));
}

std::string cmd_price(const Options& o) {
  const Market market = load_market_file(o);
  const Payoff claim = claim_for(market, o);
  ExtendedRational value;
  PathSet set;
  if (o.target == "omega-star") {
    value = price(market, claim);
    set = compute_omega_star(market).omega_star;
  } else {
    set = hedge_set(market, o.target);
    if (set.empty()) {
      value = ExtendedRational::minus_infinity();
    } else {
      if (!has_single_root(restrict_market(market, set))) {
        throw DomainError(
            "price undefined for non-constant S_0; query root_prices");
      }
      value = price_on(market, claim, set);
    }
  }
  return price_report(market, value, o.target, set);
}

std::string cmd_hedge(const Options& o) {
  const Market market = load_market_file(o);
  const Payoff claim = load_payoff(read_file(o.payoff_path), market);
  return hedge_plan_report(market,
                           superhedge(market, claim, hedge_set(market, o.target)));
}

std::string cmd_dual(const Options& o) {
  const Market market = load_market_file(o);
  const Payoff claim = load_payoff(read_file(o.payoff_path), market);
  std::optional<VertexList> vertices;
  if (o.cap) vertices = enumerate_vertices(market, o.with_options, *o.cap);
  return dual_report(market, dual_value(market, claim, o.with_options),
                     vertices);
}

std::string cmd_semistatic(const Options& o, bool target_given) {
  const Market market = load_market_file(o);
  const Payoff claim = load_payoff(read_file(o.payoff_path), market);
  const HypothesisCheck hypothesis =
      compute_omega_phi(market).omega_star.empty()
          ? HypothesisCheck{false, 0, 0, Rational(0)}
          : check_theorem_hypothesis(market);
  if (!target_given || o.target == "omega-phi") {
    return semistatic_report(market, semistatic_price(market, claim),
                             hypothesis);
  }
  const PathSet set = hedge_set(market, o.target);
  if (set.empty()) throw DomainError("empty hedge set");
  return semistatic_report(market, semistatic_price_on(market, claim, set),
                           hypothesis);
}

std::string cmd_replicate(const Options& o) {
  const Market market = load_market_file(o);
  return replication_report(
      market,
      check_replicable(market, load_payoff(read_file(o.payoff_path), market)));
}

std::string cmd_check(const Options& o, bool& equal) {
  const Market market = load_market_file(o);
  const Payoff claim = claim_for(market, o);
  DualityCheck check;
  check.omega_star = compute_omega_star(market).omega_star;
  check.primal = price(market, claim);
  check.dual = dual_value(market, claim, false).value;
  check.equal = check.primal == check.dual;
  if (!market.options.empty()) {
    check.dual_with_options = dual_value(market, claim, true).value;
    const PathSet omega_phi = compute_omega_phi(market).omega_star;
    check.semistatic = omega_phi.empty()
                           ? ExtendedRational::minus_infinity()
                           : semistatic_price(market, claim).price;
    check.equal = check.equal && *check.semistatic == *check.dual_with_options;
  }
  equal = check.equal;
  return duality_check_report(market, check);
}

std::string cmd_gen(const Options& o) {
  GoldenCase gc;
  if (o.kind == "section4") {
    Section4Config cfg = default_section4_config();
    if (o.s0) cfg.s0 = parse_rational(*o.s0);
    cfg.K0 = parse_rational(o.k0);
    cfg.K1 = parse_rational(o.k1);
    cfg.c1 = parse_rational(o.c1);
    if (!o.grid.empty()) cfg.grid = parse_list(o.grid);
    gc = gen_section4(cfg);
  } else if (o.kind == "binomial" || o.kind == "trinomial") {
    const Rational s0 = parse_rational(o.s0.value_or("1"));
    gc.name = o.kind;
    gc.market = o.kind == "binomial"
                    ? gen_binomial(parse_rational(o.u), parse_rational(o.d), s0,
                                   o.steps)
                    : gen_trinomial(parse_list(o.factors), s0, o.steps);
    gc.payoffs["call"] = call_payoff(gc.market, s0);
    const GoldenCase reference =
        o.kind == "binomial" ? golden_binomial() : golden_trinomial();
    if (save_market(reference.market) == save_market(gc.market)) gc = reference;
  } else if (o.kind == "random") {
    gc.name = "random";
    gc.market = gen_random_tree({o.seed.value_or(0), o.assets, o.steps,
                                 o.branching, o.arbitrage_free, o.max_paths});
  } else {
    throw std::invalid_argument("gen: unknown kind \"" + o.kind + "\"");
  }
  gc.payoffs["random"] = gen_random_payoff(o.seed.value_or(0),
                                           gc.market.num_paths());
  if (o.golden) return save_golden_case(gc);
  if (o.payoff_name.empty()) return save_market(gc.market);
  const auto it = gc.payoffs.find(o.payoff_name);
  if (it == gc.payoffs.end()) {
    throw std::invalid_argument("gen: no payoff \"" + o.payoff_name +
                                "\" for kind " + o.kind);
  }
  return save_payoff(it->second);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Superhedging prices, supports and dual measures on finite "
               "path-space markets.",
               "superhedge"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  const auto add_market = [&](CLI::App* cmd) {
    cmd->add_option("-m,--market", o.market_path, "Market JSON file")
        ->required();
  };
  const auto add_payoff = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("-g,--payoff", o.payoff_path, "Payoff JSON file");
    if (required) opt->required();
  };
  const auto add_target = [&](CLI::App* cmd) {
    return cmd->add_option("--target", o.target, "Hedge set")
        ->check(CLI::IsMember({"omega-star", "all", "omega-phi"}));
  };
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  auto* omega = app.add_subcommand("omega-star", "Omega*, polar set, class");
  add_market(omega);
  auto* classify_cmd =
      app.add_subcommand("classify", "Arbitrage class with options");
  add_market(classify_cmd);
  auto* price_cmd = app.add_subcommand("price", "Superhedging price");
  add_market(price_cmd);
  add_payoff(price_cmd, true);
  add_target(price_cmd);
  auto* hedge_cmd = app.add_subcommand("hedge", "Superhedging strategy");
  add_market(hedge_cmd);
  add_payoff(hedge_cmd, true);
  add_target(hedge_cmd);
  auto* dual_cmd = app.add_subcommand("dual", "Supremum over martingale measures");
  add_market(dual_cmd);
  add_payoff(dual_cmd, true);
  dual_cmd->add_option("--with-options", o.with_options,
                       "Restrict to option-consistent measures");
  dual_cmd->add_option("--cap", o.cap, "Enumerate at most this many vertices");
  auto* semi_cmd = app.add_subcommand("semistatic", "Semi-static price");
  add_market(semi_cmd);
  add_payoff(semi_cmd, true);
  CLI::Option* semi_target = add_target(semi_cmd);
  auto* check_cmd = app.add_subcommand("check", "Primal/dual self-test");
  add_market(check_cmd);
  add_payoff(check_cmd, false);
  check_cmd->add_option("--seed", o.seed, "Seed of the generated payoff");
  auto* replicate_cmd = app.add_subcommand("replicate", "Perfect-hedge test");
  add_market(replicate_cmd);
  add_payoff(replicate_cmd, true);

  auto* gen_cmd = app.add_subcommand("gen", "Generate a market or payoff");
  gen_cmd->add_option("kind", o.kind, "binomial | trinomial | random | section4")
      ->required()
      ->check(CLI::IsMember({"binomial", "trinomial", "random", "section4"}));
  gen_cmd->add_option("--seed", o.seed, "Random seed");
  gen_cmd->add_option("--payoff", o.payoff_name,
                      "Emit a named payoff instead of the market");
  gen_cmd->add_flag("--golden", o.golden, "Emit the golden case document");
  gen_cmd->add_option("--u", o.u);
  gen_cmd->add_option("--d", o.d);
  gen_cmd->add_option("--s0", o.s0);
  gen_cmd->add_option("--steps", o.steps);
  gen_cmd->add_option("--factors", o.factors, "Comma-separated factors");
  gen_cmd->add_option("--assets", o.assets);
  gen_cmd->add_option("--branching", o.branching);
  gen_cmd->add_option("--max-paths", o.max_paths);
  gen_cmd->add_option("--arbitrage-free", o.arbitrage_free);
  gen_cmd->add_option("--K0", o.k0);
  gen_cmd->add_option("--K1", o.k1);
  gen_cmd->add_option("--c1", o.c1);
  gen_cmd->add_option("--grid", o.grid, "Comma-separated grid points");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kInputError;
  }

  int code = kOk;
  std::string report;
  try {
    if (omega->parsed()) {
      report = cmd_support(o, false);
    } else if (classify_cmd->parsed()) {
      report = cmd_support(o, true);
    } else if (price_cmd->parsed()) {
      report = cmd_price(o);
    } else if (hedge_cmd->parsed()) {
      report = cmd_hedge(o);
    } else if (dual_cmd->parsed()) {
      report = cmd_dual(o);
    } else if (semi_cmd->parsed()) {
      report = cmd_semistatic(o, semi_target->count() > 0);
    } else if (check_cmd->parsed()) {
      bool equal = false;
      report = cmd_check(o, equal);
      if (!equal) code = kCheckFailed;
    } else if (replicate_cmd->parsed()) {
      report = cmd_replicate(o);
    } else {
      report = cmd_gen(o);
    }
  } catch (const ParseError& e) {
    err << "superhedge: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "superhedge: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "superhedge: " << e.what() << "\n";
    return kDomainError;
  }
  out << render(report, o.format) << std::flush;
  return code;
}

}  // namespace superhedge::cli
