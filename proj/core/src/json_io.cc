#include "superhedge/json_io.h"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace superhedge {
namespace {

using json = nlohmann::ordered_json;

json parse_document(std::string_view bytes) {
  try {
    return json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& object, const char* name,
                  const std::string& where) {
  if (!object.is_object()) throw ParseError(where + ": expected an object");
  const auto it = object.find(name);
  if (it == object.end()) {
    throw ParseError(where + ": missing field \"" + name + "\"");
  }
  return *it;
}

Rational rational_at(const json& value, const std::string& where) {
  if (!value.is_string()) {
    throw ParseError(where + ": expected a rational string");
  }
  try {
    return parse_rational(value.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

RationalVector rationals_at(const json& value, const std::string& where) {
  if (!value.is_array()) throw ParseError(where + ": expected an array");
  RationalVector result;
  for (std::size_t i = 0; i < value.size(); ++i) {
    result.push_back(rational_at(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return result;
}

std::size_t count_at(const json& value, const std::string& where) {
  if (!value.is_number_integer() || value.get<long long>() <= 0) {
    throw ParseError(where + ": expected a positive integer");
  }
  return value.get<std::size_t>();
}

std::string string_at(const json& value, const std::string& where) {
  if (!value.is_string()) throw ParseError(where + ": expected a string");
  return value.get<std::string>();
}

json rational_array(const RationalVector& values) {
  json array = json::array();
  for (const Rational& v : values) array.push_back(to_string(v));
  return array;
}

json market_json(const Market& market) {
  json doc;
  doc["assets"] = market.assets;
  doc["steps"] = market.steps;
  doc["paths"] = json::array();
  for (const Path& p : market.paths) {
    json prices = json::array();
    for (const RationalVector& row : p.prices) prices.push_back(rational_array(row));
    doc["paths"].push_back({{"id", p.id}, {"prices", std::move(prices)}});
  }
  doc["options"] = json::array();
  for (const StaticOption& o : market.options) {
    doc["options"].push_back({{"id", o.id},
                              {"payoff", rational_array(o.payoff)},
                              {"cost", to_string(o.cost)}});
  }
  return doc;
}

}  // namespace

Market load_market(std::string_view bytes) {
  const json doc = parse_document(bytes);
  Market market;
  market.assets = count_at(field(doc, "assets", "market"), "market.assets");
  market.steps = count_at(field(doc, "steps", "market"), "market.steps");

  const json& paths = field(doc, "paths", "market");
  if (!paths.is_array()) throw ParseError("market.paths: expected an array");
  for (std::size_t k = 0; k < paths.size(); ++k) {
    const std::string slot = "paths[" + std::to_string(k) + "]";
    Path path;
    path.id = string_at(field(paths[k], "id", slot), slot + ".id");
    const std::string where = "path \"" + path.id + "\"";
    const json& prices = field(paths[k], "prices", where);
    if (!prices.is_array()) throw ParseError(where + ": \"prices\" must be an array");
    for (std::size_t i = 0; i < prices.size(); ++i) {
      path.prices.push_back(
          rationals_at(prices[i], where + ".prices[" + std::to_string(i) + "]"));
    }
    market.paths.push_back(std::move(path));
  }

  if (const auto it = doc.find("options"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("market.options: expected an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const json& entry = (*it)[k];
      const std::string slot = "options[" + std::to_string(k) + "]";
      StaticOption option;
      option.id = string_at(field(entry, "id", slot), slot + ".id");
      const std::string where = "option \"" + option.id + "\"";
      option.payoff = rationals_at(field(entry, "payoff", where), where + ".payoff");
      option.cost = rational_at(field(entry, "cost", where), where + ".cost");
      market.options.push_back(std::move(option));
    }
  }
  market.validate();
  return market;
}

std::string save_market(const Market& market) {
  return market_json(market).dump(2) + "\n";
}

Payoff load_payoff(std::string_view bytes, const Market& market) {
  const json doc = parse_document(bytes);
  if (!doc.is_object()) throw ParseError("payoff: expected an object");
  Payoff payoff;
  if (const auto it = doc.find("values"); it != doc.end()) {
    payoff.values = rationals_at(*it, "payoff.values");
    if (payoff.values.size() != market.num_paths()) {
      throw ParseError("payoff.values: expected " +
                       std::to_string(market.num_paths()) + " entries, got " +
                       std::to_string(payoff.values.size()));
    }
    return payoff;
  }
  for (const Path& p : market.paths) {
    const auto it = doc.find(p.id);
    if (it == doc.end()) {
      throw ParseError("payoff: no value for path \"" + p.id + "\"");
    }
    payoff.values.push_back(rational_at(*it, "payoff[\"" + p.id + "\"]"));
  }
  if (doc.size() != market.num_paths()) {
    throw ParseError("payoff: entries for unknown path ids");
  }
  return payoff;
}

std::string save_payoff(const Payoff& payoff) {
  json doc;
  doc["values"] = rational_array(payoff.values);
  return doc.dump(2) + "\n";
}

std::string save_golden_case(const GoldenCase& golden) {
  json doc;
  doc["name"] = golden.name;
  doc["market"] = market_json(golden.market);
  doc["payoffs"] = json::object();
  for (const auto& [name, payoff] : golden.payoffs) {
    doc["payoffs"][name] = {{"values", rational_array(payoff.values)}};
  }
  doc["expected"] = json::object();
  for (const auto& [name, e] : golden.expected) {
    doc["expected"][name] = {{"value", to_string(e.value)},
                             {"provenance", to_string(e.provenance)}};
  }
  doc["expected_sets"] = json::object();
  for (const auto& [name, e] : golden.expected_sets) {
    json ids = json::array();
    for (std::size_t p : e.paths) ids.push_back(golden.market.paths[p].id);
    doc["expected_sets"][name] = {{"paths", std::move(ids)},
                                  {"provenance", to_string(e.provenance)}};
  }
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace superhedge
