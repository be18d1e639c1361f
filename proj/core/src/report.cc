#include "superhedge/report.h"

#include "json.hpp"

namespace superhedge {
namespace {

using json = nlohmann::ordered_json;

json ids(const Market& market, const PathSet& set) {
  json array = json::array();
  for (std::size_t p : set) array.push_back(market.paths[p].id);
  return array;
}

json ids(const Market& market, const std::vector<std::size_t>& members) {
  json array = json::array();
  for (std::size_t p : members) array.push_back(market.paths[p].id);
  return array;
}

json strings(const RationalVector& values) {
  json array = json::array();
  for (const Rational& v : values) array.push_back(to_string(v));
  return array;
}

json measure_json(const Market& market, const MeasureVector& measure) {
  json object = json::object();
  for (std::size_t p : measure.support) {
    object[market.paths[p].id] = to_string(measure.weights[p]);
  }
  return object;
}

json strategy_json(const Market& market, const LevelSetIndex& index,
                   const TradingStrategy& strategy) {
  json levels = json::array();
  for (std::size_t t = 0; t < strategy.holdings.size(); ++t) {
    json groups = json::array();
    for (std::size_t g = 0; g < strategy.holdings[t].size(); ++g) {
      groups.push_back({{"paths", ids(market, index.group_members(t, g))},
                        {"H", strings(strategy.holdings[t][g])}});
    }
    levels.push_back({{"t", t}, {"groups", std::move(groups)}});
  }
  return {{"holdings", std::move(levels)},
          {"static", strings(strategy.static_positions)}};
}

json plan_json(const Market& market, const HedgePlan& plan) {
  const LevelSetIndex index(market);
  json levels = json::array();
  for (std::size_t t = 0; t < plan.values.size(); ++t) {
    json groups = json::array();
    for (std::size_t g = 0; g < plan.values[t].size(); ++g) {
      groups.push_back({{"paths", ids(market, index.group_members(t, g))},
                        {"value", to_string(plan.values[t][g])},
                        {"H", strings(plan.strategy.holdings[t][g])}});
    }
    levels.push_back({{"t", t}, {"groups", std::move(groups)}});
  }
  json roots = json::array();
  for (const ExtendedRational& r : plan.root_prices) roots.push_back(to_string(r));
  return {{"target", ids(market, plan.target)},
          {"root_prices", std::move(roots)},
          {"levels", std::move(levels)}};
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string support_report(const Market& market, const SupportReport& support,
                           const ArbitrageClass& classification) {
  const LevelSetIndex index(market);
  json doc;
  doc["omega_star"] = ids(market, support.omega_star);
  doc["polar"] = ids(market, support.polar_set);
  doc["class"] = to_string(classification.tag);
  doc["witness"] = classification.witness
                       ? strategy_json(market, index, *classification.witness)
                       : json(nullptr);
  doc["uniform_measure"] = support.uniform_witness
                               ? measure_json(market, *support.uniform_witness)
                               : json(nullptr);
  doc["options_constrained"] = support.with_options;
  return dump(doc);
}

std::string hedge_plan_report(const Market& market, const HedgePlan& plan) {
  return dump(plan_json(market, plan));
}

std::string price_report(const Market& market, const ExtendedRational& price,
                         const std::string& target_name,
                         const PathSet& hedge_set) {
  json doc;
  doc["price"] = to_string(price);
  doc["target"] = target_name;
  doc["hedge_set"] = ids(market, hedge_set);
  return dump(doc);
}

std::string dual_report(const Market& market, const DualReport& dual,
                        const std::optional<VertexList>& vertices) {
  json doc;
  doc["value"] = to_string(dual.value);
  doc["measure"] =
      dual.optimizer ? measure_json(market, *dual.optimizer) : json(nullptr);
  doc["options_constrained"] = dual.constrained_by_options;
  if (vertices) {
    json list = json::array();
    for (const MeasureVector& v : vertices->vertices) {
      list.push_back(measure_json(market, v));
    }
    doc["vertices"] = std::move(list);
    doc["truncated"] = vertices->truncated;
  }
  return dump(doc);
}

std::string semistatic_report(const Market& market, const SemiStaticPlan& plan,
                              const HypothesisCheck& hypothesis) {
  json doc;
  doc["price"] = to_string(plan.price);
  doc["h"] = strings(plan.static_positions);
  doc["dynamic"] =
      plan.dynamic_plan ? plan_json(market, *plan.dynamic_plan) : json(nullptr);
  doc["hedge_set"] = ids(market, plan.hedge_set);
  doc["hypothesis"] = hypothesis.holds ? "holds" : "fails";
  return dump(doc);
}

std::string replication_report(const Market& market,
                               const Replication& replication) {
  json doc;
  doc["replicable"] = replication.replicable;
  doc["cost"] = replication.replicable ? json(to_string(replication.cost))
                                       : json(nullptr);
  doc["gap"] = replication.replicable ? json(nullptr)
                                      : json(to_string(replication.gap));
  doc["plan"] = replication.plan ? plan_json(market, *replication.plan)
                                 : json(nullptr);
  return dump(doc);
}

std::string duality_check_report(const Market& market,
                                 const DualityCheck& check) {
  json doc;
  doc["equal"] = check.equal;
  doc["primal"] = to_string(check.primal);
  doc["dual"] = to_string(check.dual);
  doc["omega_star"] = ids(market, check.omega_star);
  doc["semistatic"] =
      check.semistatic ? json(to_string(*check.semistatic)) : json(nullptr);
  doc["dual_with_options"] = check.dual_with_options
                                 ? json(to_string(*check.dual_with_options))
                                 : json(nullptr);
  return dump(doc);
}

}  // namespace superhedge
