#include "superhedge/semistatic.h"

#include <stdexcept>

#include "measure_polytope.h"
#include "strategy_lp.h"
#include "superhedge/lp.h"
#include "superhedge/polar.h"

namespace superhedge {
namespace {

PathSet require_omega_phi(const Market& market) {
  PathSet omega_phi = compute_omega_phi(market).omega_star;
  if (omega_phi.empty()) {
    throw DomainError("no option-consistent martingale measure");
  }
  return omega_phi;
}

Payoff net_of_options(const Market& market, const Payoff& claim,
                      const RationalVector& h) {
  Payoff net = claim;
  if (h.empty()) return net;
  for (std::size_t p = 0; p < market.num_paths(); ++p) {
    net.values[p] -= dot(h, market.adjusted_option_payoffs(p));
  }
  return net;
}

}  // namespace

SemiStaticPlan semistatic_price_on(const Market& market, const Payoff& claim,
                                   const PathSet& hedge_set) {
  if (hedge_set.empty()) throw DomainError("empty hedge set");
  if (!has_single_root(restrict_market(market, hedge_set))) {
    throw DomainError("price undefined for non-constant S_0; query root_prices");
  }
  const LevelSetIndex index(market);
  const internal::StrategyColumns columns(market, index, hedge_set, 1, true);

  // minimise x  s.t.  x + gain(w) >= claim(w) on the hedge set; all free.
  LinearProgram lp;
  lp.objective.assign(columns.end(), Rational(0));
  lp.objective[0] = 1;
  for (std::size_t p : hedge_set) {
    RationalVector row(columns.end(), Rational(0));
    row[0] = 1;
    columns.add_gain(row, p);
    lp.add_constraint(std::move(row), Relation::kGreaterEqual,
                      claim.values.at(p));
  }
  const LpOutcome outcome = solve(lp);

  SemiStaticPlan plan;
  plan.hedge_set = hedge_set;
  if (outcome.status != LpStatus::kOptimal) {
    plan.price = ExtendedRational::minus_infinity();
    return plan;
  }
  plan.price = outcome.value;
  plan.static_positions = columns.extract(outcome.solution).static_positions;
  plan.dynamic_plan = superhedge(
      market, net_of_options(market, claim, plan.static_positions), hedge_set);
  if (plan.dynamic_plan->root_prices[index.group_of(0, hedge_set.members()[0])] !=
      plan.price) {
    throw std::logic_error("semistatic: backward induction disagrees with LP");
  }
  return plan;
}

SemiStaticPlan semistatic_price(const Market& market, const Payoff& claim) {
  return semistatic_price_on(market, claim, require_omega_phi(market));
}

ExtendedRational semistatic_via_scan(const Market& market, const Payoff& claim,
                                     const std::vector<RationalVector>& grid) {
  const PathSet omega_phi = require_omega_phi(market);
  ExtendedRational best = ExtendedRational::plus_infinity();
  for (const RationalVector& h : grid) {
    if (h.size() != market.options.size()) {
      throw std::invalid_argument("semistatic_via_scan: grid point dimension");
    }
    const ExtendedRational value =
        price_on(market, net_of_options(market, claim, h), omega_phi);
    if (value < best) best = value;
  }
  return best;
}

HypothesisCheck check_theorem_hypothesis(const Market& market) {
  return check_theorem_hypothesis_on(market, require_omega_phi(market));
}

HypothesisCheck check_theorem_hypothesis_on(const Market& market,
                                            const PathSet& support) {
  const LevelSetIndex index(market);
  const internal::MeasurePolytope polytope(market, index, support, false);
  if (polytope.empty()) throw DomainError("no martingale measure on the support");

  HypothesisCheck check;
  for (std::size_t j = 0; j < market.options.size(); ++j) {
    RationalVector adjusted(market.num_paths());
    for (std::size_t p = 0; p < market.num_paths(); ++p) {
      adjusted[p] = market.options[j].payoff[p] - market.options[j].cost;
    }
    const Rational maximum = polytope.maximize(adjusted)->value;
    if (sgn(maximum) != 0) return {false, j, +1, maximum};
    for (Rational& v : adjusted) v = -v;
    const Rational minimum = -polytope.maximize(adjusted)->value;
    if (sgn(minimum) != 0) return {false, j, -1, minimum};
  }
  return check;
}

}  // namespace superhedge
