#ifndef SUPERHEDGE_STRATEGY_H_
#define SUPERHEDGE_STRATEGY_H_

#include <vector>

#include "superhedge/market.h"

namespace superhedge {

// Predictable dynamic positions plus a static option position.
//
// holdings[t - 1][g] is H_t, the asset vector held over (t - 1, t] on level-set
// group g at time t - 1. Constancy on level sets is structural.
struct TradingStrategy {
  std::vector<std::vector<RationalVector>> holdings;
  RationalVector static_positions;

  static TradingStrategy zero(const Market& market, const LevelSetIndex& index,
                              bool with_static);

  friend bool operator==(const TradingStrategy&,
                         const TradingStrategy&) = default;
};

// (H . S)_T along one path.
Rational dynamic_gain(const Market& market, const LevelSetIndex& index,
                      const TradingStrategy& strategy, std::size_t path);

// (H . S)_T + h (Phi - c) along one path.
Rational total_gain(const Market& market, const LevelSetIndex& index,
                    const TradingStrategy& strategy, std::size_t path);

}  // namespace superhedge

#endif  // SUPERHEDGE_STRATEGY_H_
