#ifndef SUPERHEDGE_JSON_IO_H_
#define SUPERHEDGE_JSON_IO_H_

#include <string>
#include <string_view>

#include "superhedge/casebook.h"
#include "superhedge/market.h"

namespace superhedge {

// Market document:
//   { "assets": int, "steps": int,
//     "paths":   [ { "id": str, "prices": [[str, ...], ...] } ],
//     "options": [ { "id": str, "payoff": [str, ...], "cost": str } ] }
// Every number is a rational string (see parse_rational). "options" may be
// omitted. Throws ParseError naming the offending path, option or field.
Market load_market(std::string_view bytes);
std::string save_market(const Market& market);

// Either { "values": [str per path] } or { "<path id>": str, ... } covering
// every path of the market.
Payoff load_payoff(std::string_view bytes, const Market& market);
std::string save_payoff(const Payoff& payoff);

// { "name": str, "market": market, "payoffs": {name: payoff},
//   "expected": {name: {"value": str, "provenance": str}},
//   "expected_sets": {name: {"paths": [ids], "provenance": str}} }
std::string save_golden_case(const GoldenCase& golden);

std::string read_file(const std::string& path);

}  // namespace superhedge

#endif  // SUPERHEDGE_JSON_IO_H_
