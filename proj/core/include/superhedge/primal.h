#ifndef SUPERHEDGE_PRIMAL_H_
#define SUPERHEDGE_PRIMAL_H_

#include <optional>
#include <span>
#include <vector>

#include "superhedge/market.h"
#include "superhedge/strategy.h"

namespace superhedge {

// Cheapest one-period superhedge on a single level set.
struct LocalHedge {
  ExtendedRational cash;
  RationalVector holdings;
  // With finite cash: LP dual weights, one per input row. Nonnegative, sum
  // to one, zero on dropped rows, sum w_i * increment_i = 0 and
  // sum w_i * target_i = cash. Any capital y < cash therefore cannot
  // superhedge: averaging y + H . increment_i >= target_i with these weights
  // gives y >= cash.
  RationalVector certificate;
};

// minimise x  s.t.  x + H . increments[i] >= targets[i]  for finite targets.
// -inf targets impose nothing; no rows at all gives cash = -inf and zero
// holdings, as does an LP unbounded below. Throws std::invalid_argument on a
// +inf target.
LocalHedge local_superhedge(std::span<const RationalVector> increments,
                           std::span<const ExtendedRational> targets,
                           std::size_t assets);

// Output of the backward recursion.
struct HedgePlan {
  // values[t][g]: capital X_t required on level-set group g at time t, for
  // t < steps (X_steps is the claim itself). -inf on groups outside the
  // projected support. A group whose local problem is unbounded below is
  // funded with whatever its parent delivers; that amount is recorded here.
  std::vector<std::vector<ExtendedRational>> values;
  TradingStrategy strategy;
  std::vector<ExtendedRational> root_prices;  // values[0]
  PathSet target;
  std::vector<PathSet> supports;  // D_0 .. D_steps
};

// Superhedges `claim` on `target` by backward induction over level sets:
// D_T = target, D_{t-1} = project_support(D_t), one local_superhedge per
// group at t - 1 meeting D_{t-1}. The pointwise inequality
// X_0 + sum H_t . dS_t >= claim is checked exactly on the target for every
// root with a finite price. Throws DomainError on an empty target.
HedgePlan superhedge(const Market& market, const Payoff& claim,
                     const PathSet& target);

// Superhedging price on Omega*. Requires a single root (constant S_0),
// otherwise DomainError. Returns -inf when Omega* is empty.
ExtendedRational price(const Market& market, const Payoff& claim);

// Root price of superhedge(market, claim, target) for a single-root market.
ExtendedRational price_on(const Market& market, const Payoff& claim,
                          const PathSet& target);

// True iff X_0 + sum H_t . dS_t >= claim on the plan's target for every
// path whose root price is finite.
bool verify_plan(const Market& market, const Payoff& claim,
                 const HedgePlan& plan);

struct Replication {
  bool replicable = false;
  Rational cost;               // when replicable
  std::optional<HedgePlan> plan;  // when replicable; exact on Omega*
  Rational gap;                // price(g) + price(-g) when not replicable
};

// Perfect-hedge test. Requires a single root and Omega* non-empty
// (DomainError otherwise).
Replication check_replicable(const Market& market, const Payoff& claim);

// Is there a zero-cost dynamic strategy with (H . S)_T >= claim on Omega*?
// Solved as one feasibility LP over all level sets at once.
bool zero_cost_superhedge_exists(const Market& market, const Payoff& claim);

}  // namespace superhedge

#endif  // SUPERHEDGE_PRIMAL_H_
