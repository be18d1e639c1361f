#ifndef SUPERHEDGE_SEMISTATIC_H_
#define SUPERHEDGE_SEMISTATIC_H_

#include <optional>
#include <vector>

#include "superhedge/market.h"
#include "superhedge/primal.h"

namespace superhedge {

// Semi-static superhedge: dynamic trading plus a static option position h.
// price + (H . S)_T + h (Phi - c) >= claim holds exactly on hedge_set.
struct SemiStaticPlan {
  ExtendedRational price;
  RationalVector static_positions;
  // Backward-induction plan for claim - h (Phi - c); its root price equals
  // `price`. Absent when the price is -inf.
  std::optional<HedgePlan> dynamic_plan;
  PathSet hedge_set;
};

// Semi-static price on Omega_Phi, solved as one LP over (x, h, H).
// Throws DomainError when Omega_Phi is empty or S_0 is not constant on it.
SemiStaticPlan semistatic_price(const Market& market, const Payoff& claim);

// Same LP on an arbitrary hedge set (e.g. every path). May return -inf.
SemiStaticPlan semistatic_price_on(const Market& market, const Payoff& claim,
                                   const PathSet& hedge_set);

// min over the supplied static positions h of the dynamic price of
// claim - h (Phi - c) on Omega_Phi. Never below semistatic_price.
ExtendedRational semistatic_via_scan(const Market& market, const Payoff& claim,
                                     const std::vector<RationalVector>& grid);

// Is every martingale measure supported on Omega_Phi option-consistent?
// Checked by maximising and minimising E_Q[phi^j - c^j] over martingale
// measures on Omega_Phi for every option j.
struct HypothesisCheck {
  bool holds = true;
  std::size_t option = 0;  // first violating option
  int direction = 0;       // +1: maximum > 0, -1: minimum < 0
  Rational extreme;        // the offending maximum or minimum
};

HypothesisCheck check_theorem_hypothesis(const Market& market);
// Same test against a caller-supplied support, e.g. an Omega_Phi computed
// before an option was added.
HypothesisCheck check_theorem_hypothesis_on(const Market& market,
                                            const PathSet& support);

}  // namespace superhedge

#endif  // SUPERHEDGE_SEMISTATIC_H_
