#ifndef SUPERHEDGE_DUAL_H_
#define SUPERHEDGE_DUAL_H_

#include <optional>
#include <vector>

#include "superhedge/market.h"
#include "superhedge/measure.h"

namespace superhedge {

struct DualReport {
  ExtendedRational value;  // -inf when no (option-)martingale measure exists
  std::optional<MeasureVector> optimizer;
  bool constrained_by_options = false;
};

// sup E_Q[claim] over finite-support martingale measures, optionally
// restricted to those pricing every option at its quoted cost. The optimizer
// is a vertex of the measure polytope.
DualReport dual_value(const Market& market, const Payoff& claim,
                      bool with_options);

// Same supremum over measures supported on `domain` only.
DualReport dual_value_on(const Market& market, const Payoff& claim,
                         const PathSet& domain, bool with_options);

// claim in C = {f : f <= k on Omega* for a terminal gain k}, decided as
// dual_value(claim) <= 0 and cross-checked against the zero-cost primal
// feasibility problem (std::logic_error if the two ever disagree).
// Throws DomainError when Omega* is empty.
bool in_cone(const Market& market, const Payoff& claim);

struct VertexList {
  std::vector<MeasureVector> vertices;
  bool truncated = false;
};

// Vertices of the martingale measure polytope in discovery order (breadth
// first from the phase-one basis), at most `cap` of them.
VertexList enumerate_vertices(const Market& market, bool with_options,
                              std::size_t cap);

}  // namespace superhedge

#endif  // SUPERHEDGE_DUAL_H_
