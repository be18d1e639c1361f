#include "superhedge/polar.h"

#include "measure_polytope.h"
#include "strategy_lp.h"
#include "superhedge/lp.h"

namespace superhedge {
namespace {

SupportReport compute_support(const Market& market, bool with_options) {
  const std::size_t n = market.num_paths();
  const LevelSetIndex index(market);
  const internal::MeasurePolytope polytope(market, index, PathSet::all(n),
                                           with_options);
  SupportReport report;
  report.with_options = with_options;
  report.witnesses.resize(n);

  std::vector<std::size_t> members;
  std::vector<MeasureVector> charged_by;
  if (!polytope.empty()) {
    RationalVector indicator(n, Rational(0));
    for (std::size_t p = 0; p < n; ++p) {
      indicator[p] = 1;
      auto optimum = polytope.maximize(indicator);
      indicator[p] = 0;
      if (sgn(optimum->value) > 0) {
        members.push_back(p);
        charged_by.push_back(optimum->measure);
        report.witnesses[p] = std::move(optimum->measure);
      }
    }
  }
  report.omega_star = PathSet(std::move(members));
  report.polar_set = report.omega_star.complement(n);
  if (!charged_by.empty()) report.uniform_witness = average(charged_by);
  return report;
}

SupportReport from_survivors(const std::vector<bool>& alive,
                             bool with_options) {
  SupportReport report;
  report.with_options = with_options;
  report.omega_star = PathSet::from_mask(alive);
  report.polar_set = report.omega_star.complement(alive.size());
  report.witnesses.resize(alive.size());
  return report;
}

// Paths of `members` charged by a one-period one-point arbitrage H with
// H . dS_t >= 0 on all of them.
std::vector<std::size_t> locally_charged(const Market& market,
                                         const std::vector<std::size_t>& members,
                                         std::size_t t) {
  const std::size_t d = market.assets;
  const std::size_t k = members.size();
  std::vector<RationalVector> deltas;
  bool any_move = false;
  for (std::size_t p : members) {
    deltas.push_back(market.increment(p, t));
    for (const Rational& v : deltas.back()) any_move |= sgn(v) != 0;
  }
  if (!any_move) return {};

  // maximise sum s  s.t.  H . dS(w) - s_w >= 0,  0 <= s_w <= 1.
  LinearProgram lp;
  lp.sense = Sense::kMaximize;
  lp.objective.assign(d + k, Rational(0));
  lp.bounds.assign(d, VariableBounds::free());
  for (std::size_t j = 0; j < k; ++j) {
    lp.objective[d + j] = 1;
    lp.bounds.push_back(VariableBounds::between(0, 1));
  }
  for (std::size_t j = 0; j < k; ++j) {
    RationalVector row(d + k, Rational(0));
    for (std::size_t i = 0; i < d; ++i) row[i] = deltas[j][i];
    row[d + j] = -1;
    lp.add_constraint(std::move(row), Relation::kGreaterEqual, 0);
  }
  const LpOutcome outcome = solve(lp);
  std::vector<std::size_t> charged;
  for (std::size_t j = 0; j < k; ++j) {
    if (sgn(outcome.solution[d + j]) > 0) charged.push_back(members[j]);
  }
  return charged;
}

}  // namespace

SupportReport compute_omega_star(const Market& market) {
  return compute_support(market, false);
}

SupportReport compute_omega_phi(const Market& market) {
  return compute_support(market, true);
}

SupportReport compute_omega_star_iterative(const Market& market) {
  const LevelSetIndex index(market);
  std::vector<bool> alive(market.num_paths(), true);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t t = 1; t <= market.steps; ++t) {
      for (std::size_t g = 0; g < index.num_groups(t - 1); ++g) {
        std::vector<std::size_t> members;
        for (std::size_t p : index.group_members(t - 1, g)) {
          if (alive[p]) members.push_back(p);
        }
        if (members.empty()) continue;
        for (std::size_t p : locally_charged(market, members, t)) {
          alive[p] = false;
          changed = true;
        }
      }
    }
  }
  return from_survivors(alive, false);
}

SupportReport compute_omega_phi_iterative(const Market& market) {
  const LevelSetIndex index(market);
  PathSet domain = PathSet::all(market.num_paths());
  for (;;) {
    const OnePointArbitrage arbitrage =
        find_one_point_arbitrage(market, index, domain, true);
    if (arbitrage.charged.empty()) break;
    std::vector<std::size_t> rest;
    for (std::size_t p : domain) {
      if (!arbitrage.charged.contains(p)) rest.push_back(p);
    }
    domain = PathSet(std::move(rest));
  }
  return from_survivors(domain.mask(market.num_paths()), true);
}

OnePointArbitrage find_one_point_arbitrage(const Market& market,
                                           const LevelSetIndex& index,
                                           const PathSet& domain,
                                           bool with_options) {
  OnePointArbitrage result{
      TradingStrategy::zero(market, index, with_options), PathSet()};
  if (domain.empty()) return result;

  const internal::StrategyColumns columns(market, index, domain, 0,
                                          with_options);
  const std::size_t s_begin = columns.end();
  const std::size_t total = s_begin + domain.size();

  // maximise sum s  s.t.  gain(w) - s_w >= 0 on the domain,  0 <= s_w <= 1.
  LinearProgram lp;
  lp.sense = Sense::kMaximize;
  lp.objective.assign(total, Rational(0));
  lp.bounds.assign(s_begin, VariableBounds::free());
  for (std::size_t k = 0; k < domain.size(); ++k) {
    lp.objective[s_begin + k] = 1;
    lp.bounds.push_back(VariableBounds::between(0, 1));
    RationalVector row(total, Rational(0));
    columns.add_gain(row, domain.members()[k]);
    row[s_begin + k] = -1;
    lp.add_constraint(std::move(row), Relation::kGreaterEqual, 0);
  }
  const LpOutcome outcome = solve(lp);
  if (sgn(outcome.value.value()) == 0) return result;

  result.strategy = columns.extract(outcome.solution);
  std::vector<std::size_t> charged;
  for (std::size_t p : domain) {
    if (sgn(total_gain(market, index, result.strategy, p)) > 0) {
      charged.push_back(p);
    }
  }
  result.charged = PathSet(std::move(charged));
  return result;
}

const char* to_string(ArbitrageTag tag) {
  switch (tag) {
    case ArbitrageTag::kFullyArbitrageFree:
      return "fully-arbitrage-free";
    case ArbitrageTag::kOnePointArbitrage:
      return "one-point-arbitrage";
    case ArbitrageTag::kNoMartingaleMeasure:
      return "no-martingale-measure";
  }
  return "unknown";
}

ArbitrageClass classify(const Market& market) {
  const SupportReport report = compute_omega_phi(market);
  ArbitrageClass result;
  result.support = report.omega_star;
  if (report.omega_star.size() == market.num_paths()) {
    result.tag = ArbitrageTag::kFullyArbitrageFree;
    return result;
  }
  result.tag = report.omega_star.empty() ? ArbitrageTag::kNoMartingaleMeasure
                                         : ArbitrageTag::kOnePointArbitrage;
  const LevelSetIndex index(market);
  result.witness = find_one_point_arbitrage(
                       market, index, PathSet::all(market.num_paths()), true)
                       .strategy;
  return result;
}

}  // namespace superhedge
