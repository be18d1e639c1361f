#include "superhedge/primal.h"

#include <stdexcept>

#include "strategy_lp.h"
#include "superhedge/lp.h"
#include "superhedge/polar.h"

namespace superhedge {
namespace {

void require_single_root(const Market& market) {
  if (!has_single_root(market)) {
    throw DomainError("price undefined for non-constant S_0; query root_prices");
  }
}

// Capital level on the group at t containing `path` (t < steps) or the
// claim itself at maturity.
ExtendedRational level(const Market& market, const LevelSetIndex& index,
                       const Payoff& claim, const HedgePlan& plan,
                       std::size_t t, std::size_t path) {
  if (t == market.steps) return claim.values[path];
  return plan.values[t][index.group_of(t, path)];
}

struct LocalRows {
  std::vector<RationalVector> increments;
  std::vector<ExtendedRational> targets;
};

LocalRows local_rows(const Market& market, const LevelSetIndex& index,
                     const Payoff& claim, const HedgePlan& plan, std::size_t t,
                     std::size_t group) {
  LocalRows rows;
  for (std::size_t p : index.group_members(t - 1, group)) {
    if (!plan.supports[t].contains(p)) continue;
    rows.increments.push_back(market.increment(p, t));
    rows.targets.push_back(level(market, index, claim, plan, t, p));
  }
  return rows;
}

// Holdings that carry a fixed capital to the finite targets of one group.
RationalVector fund_from(const Rational& capital, const LocalRows& rows,
                         std::size_t assets) {
  std::vector<Constraint> constraints;
  for (std::size_t i = 0; i < rows.targets.size(); ++i) {
    if (!rows.targets[i].is_finite()) continue;
    constraints.push_back(
        {rows.increments[i], Relation::kGreaterEqual,
         rows.targets[i].value() - capital});
  }
  const FeasibilityOutcome outcome =
      solve_feasibility(constraints, assets);
  if (!outcome.feasible) {
    throw std::logic_error("superhedge: unbounded level set rejected funding");
  }
  return outcome.witness;
}

}  // namespace

LocalHedge local_superhedge(std::span<const RationalVector> increments,
                            std::span<const ExtendedRational> targets,
                            std::size_t assets) {
  if (increments.size() != targets.size()) {
    throw std::invalid_argument("local_superhedge: size mismatch");
  }
  LocalHedge hedge{ExtendedRational::minus_infinity(),
                   RationalVector(assets, Rational(0)), {}};

  // Columns: x, H_1..H_d. All free.
  LinearProgram lp;
  lp.objective.assign(assets + 1, Rational(0));
  lp.objective[0] = 1;
  std::vector<std::size_t> row_of;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i].is_plus_infinity()) {
      throw std::invalid_argument("local_superhedge: infinite target");
    }
    if (increments[i].size() != assets) {
      throw std::invalid_argument("local_superhedge: increment dimension");
    }
    if (targets[i].is_minus_infinity()) continue;
    RationalVector row(assets + 1);
    row[0] = 1;
    for (std::size_t a = 0; a < assets; ++a) row[a + 1] = increments[i][a];
    lp.add_constraint(std::move(row), Relation::kGreaterEqual,
                      targets[i].value());
    row_of.push_back(i);
  }
  if (lp.constraints.empty()) return hedge;

  const LpOutcome outcome = solve(lp);
  if (outcome.status != LpStatus::kOptimal) return hedge;

  hedge.cash = outcome.value;
  hedge.holdings.assign(outcome.solution.begin() + 1, outcome.solution.end());
  hedge.certificate.assign(targets.size(), Rational(0));
  for (std::size_t r = 0; r < row_of.size(); ++r) {
    hedge.certificate[row_of[r]] = outcome.duals[r];
  }
  return hedge;
}

HedgePlan superhedge(const Market& market, const Payoff& claim,
                     const PathSet& target) {
  if (target.empty()) throw DomainError("empty target set");
  if (claim.values.size() != market.num_paths()) {
    throw std::invalid_argument("superhedge: payoff length != paths");
  }
  const LevelSetIndex index(market);
  const std::size_t T = market.steps;

  HedgePlan plan;
  plan.target = target;
  plan.strategy = TradingStrategy::zero(market, index, false);
  plan.supports.resize(T + 1);
  plan.supports[T] = target;
  for (std::size_t t = 0; t < T; ++t) {
    plan.values.emplace_back(index.num_groups(t),
                             ExtendedRational::minus_infinity());
  }
  std::vector<std::vector<bool>> unbounded(T);
  for (std::size_t t = 0; t < T; ++t) {
    unbounded[t].assign(index.num_groups(t), false);
  }

  for (std::size_t t = T; t >= 1; --t) {
    plan.supports[t - 1] = project_support(index, plan.supports[t], t - 1);
    std::vector<bool> met(index.num_groups(t - 1), false);
    for (std::size_t p : plan.supports[t - 1]) met[index.group_of(t - 1, p)] = true;

    for (std::size_t g = 0; g < met.size(); ++g) {
      if (!met[g]) continue;
      const LocalRows rows = local_rows(market, index, claim, plan, t, g);
      LocalHedge hedge =
          local_superhedge(rows.increments, rows.targets, market.assets);
      unbounded[t - 1][g] = !hedge.cash.is_finite();
      plan.values[t - 1][g] = std::move(hedge.cash);
      plan.strategy.holdings[t - 1][g] = std::move(hedge.holdings);
    }
  }

  // Fund unbounded interior groups from the capital their parent delivers.
  for (std::size_t s = 1; s < T; ++s) {
    for (std::size_t g = 0; g < index.num_groups(s); ++g) {
      if (!unbounded[s][g]) continue;
      const std::size_t parent = index.parent(s, g);
      const ExtendedRational& base = plan.values[s - 1][parent];
      if (!base.is_finite()) continue;
      const std::size_t member = index.group_members(s, g).front();
      const Rational capital =
          base.value() + dot(plan.strategy.holdings[s - 1][parent],
                             market.increment(member, s));
      plan.values[s][g] = capital;
      const LocalRows rows = local_rows(market, index, claim, plan, s + 1, g);
      plan.strategy.holdings[s][g] = fund_from(capital, rows, market.assets);
    }
  }
  plan.root_prices = plan.values[0];

  if (!verify_plan(market, claim, plan)) {
    throw std::logic_error("superhedge: pointwise inequality violated");
  }
  return plan;
}

bool verify_plan(const Market& market, const Payoff& claim,
                 const HedgePlan& plan) {
  const LevelSetIndex index(market);
  for (std::size_t p : plan.target) {
    const ExtendedRational& root = plan.root_prices[index.group_of(0, p)];
    if (!root.is_finite()) continue;
    const Rational wealth =
        root.value() + dynamic_gain(market, index, plan.strategy, p);
    if (wealth < claim.values[p]) return false;
  }
  return true;
}

ExtendedRational price_on(const Market& market, const Payoff& claim,
                          const PathSet& target) {
  require_single_root(market);
  return superhedge(market, claim, target).root_prices.front();
}

ExtendedRational price(const Market& market, const Payoff& claim) {
  require_single_root(market);
  const SupportReport support = compute_omega_star_iterative(market);
  if (support.omega_star.empty()) return ExtendedRational::minus_infinity();
  return price_on(market, claim, support.omega_star);
}

Replication check_replicable(const Market& market, const Payoff& claim) {
  require_single_root(market);
  const SupportReport support = compute_omega_star_iterative(market);
  if (support.omega_star.empty()) {
    throw DomainError("replication undefined without martingale measures");
  }
  Payoff negated = claim;
  for (Rational& v : negated.values) v = -v;

  HedgePlan plan = superhedge(market, claim, support.omega_star);
  const Rational upper = plan.root_prices.front().value();
  const Rational lower_neg =
      price_on(market, negated, support.omega_star).value();

  Replication result;
  const Rational gap = upper + lower_neg;
  if (sgn(gap) == 0) {
    result.replicable = true;
    result.cost = upper;
    result.plan = std::move(plan);
  } else {
    result.gap = gap;
  }
  return result;
}

bool zero_cost_superhedge_exists(const Market& market, const Payoff& claim) {
  const LevelSetIndex index(market);
  const SupportReport support = compute_omega_star_iterative(market);
  const internal::StrategyColumns columns(market, index, support.omega_star, 0,
                                          false);
  std::vector<Constraint> constraints;
  for (std::size_t p : support.omega_star) {
    RationalVector row(columns.end(), Rational(0));
    columns.add_gain(row, p);
    constraints.push_back({std::move(row), Relation::kGreaterEqual,
                           claim.values[p]});
  }
  return solve_feasibility(constraints, columns.end()).feasible;
}

}  // namespace superhedge
