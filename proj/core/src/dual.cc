#include "superhedge/dual.h"

#include <stdexcept>

#include "measure_polytope.h"
#include "superhedge/primal.h"

namespace superhedge {

DualReport dual_value_on(const Market& market, const Payoff& claim,
                         const PathSet& domain, bool with_options) {
  if (claim.values.size() != market.num_paths()) {
    throw std::invalid_argument("dual_value: payoff length != paths");
  }
  const LevelSetIndex index(market);
  const internal::MeasurePolytope polytope(market, index, domain,
                                           with_options);
  DualReport report;
  report.constrained_by_options = with_options;
  auto optimum = polytope.maximize(claim.values);
  if (!optimum) {
    report.value = ExtendedRational::minus_infinity();
    return report;
  }
  report.value = optimum->value;
  report.optimizer = std::move(optimum->measure);
  return report;
}

DualReport dual_value(const Market& market, const Payoff& claim,
                      bool with_options) {
  return dual_value_on(market, claim, PathSet::all(market.num_paths()),
                       with_options);
}

bool in_cone(const Market& market, const Payoff& claim) {
  const DualReport dual = dual_value(market, claim, false);
  if (!dual.value.is_finite()) {
    throw DomainError("cone undefined without martingale measures");
  }
  const bool by_measures = sgn(dual.value.value()) <= 0;
  if (by_measures != zero_cost_superhedge_exists(market, claim)) {
    throw std::logic_error("in_cone: primal and dual characterisations differ");
  }
  return by_measures;
}

VertexList enumerate_vertices(const Market& market, bool with_options,
                              std::size_t cap) {
  const LevelSetIndex index(market);
  const internal::MeasurePolytope polytope(
      market, index, PathSet::all(market.num_paths()), with_options);
  VertexList list;
  list.vertices = polytope.vertices(cap, list.truncated);
  return list;
}

}  // namespace superhedge
