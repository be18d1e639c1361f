#ifndef SUPERHEDGE_REPORT_H_
#define SUPERHEDGE_REPORT_H_

#include <optional>
#include <string>

#include "superhedge/dual.h"
#include "superhedge/polar.h"
#include "superhedge/primal.h"
#include "superhedge/semistatic.h"

namespace superhedge {

// JSON report documents. Paths are referred to by id, rationals by their
// canonical strings and infinities by "inf" / "-inf". The shapes match the
// schema files shipped in schemas/.

// { "omega_star": [ids], "polar": [ids], "class": str,
//   "witness": strategy | null, "uniform_measure": {id: w} | null,
//   "options_constrained": bool }
std::string support_report(const Market& market, const SupportReport& support,
                           const ArbitrageClass& classification);

// { "target": [ids], "root_prices": [str],
//   "levels": [ { "t": int, "groups": [ { "paths": [ids], "value": str,
//                                          "H": [str] } ] } ] }
// Group entries at time t carry X_t and the holdings over (t, t + 1].
std::string hedge_plan_report(const Market& market, const HedgePlan& plan);

// { "price": str, "target": str, "hedge_set": [ids] }
std::string price_report(const Market& market, const ExtendedRational& price,
                         const std::string& target_name,
                         const PathSet& hedge_set);

// { "value": str, "measure": {id: w} | null, "options_constrained": bool,
//   optionally "vertices": [{id: w}], "truncated": bool }
std::string dual_report(const Market& market, const DualReport& dual,
                        const std::optional<VertexList>& vertices);

// { "price": str, "h": [str], "dynamic": hedge plan | null,
//   "hedge_set": [ids], "hypothesis": "holds" | "fails" }
std::string semistatic_report(const Market& market, const SemiStaticPlan& plan,
                              const HypothesisCheck& hypothesis);

// { "replicable": bool, "cost": str | null, "gap": str | null,
//   "plan": hedge plan | null }
std::string replication_report(const Market& market,
                               const Replication& replication);

// { "equal": bool, "primal": str, "dual": str, "omega_star": [ids],
//   "semistatic": str | null, "dual_with_options": str | null }
struct DualityCheck {
  ExtendedRational primal;
  ExtendedRational dual;
  PathSet omega_star;
  std::optional<ExtendedRational> semistatic;
  std::optional<ExtendedRational> dual_with_options;
  bool equal = false;
};
std::string duality_check_report(const Market& market,
                                 const DualityCheck& check);

}  // namespace superhedge

#endif  // SUPERHEDGE_REPORT_H_
