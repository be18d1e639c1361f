#include "superhedge/strategy.h"

namespace superhedge {

TradingStrategy TradingStrategy::zero(const Market& market,
                                      const LevelSetIndex& index,
                                      bool with_static) {
  TradingStrategy s;
  for (std::size_t t = 1; t <= market.steps; ++t) {
    s.holdings.emplace_back(index.num_groups(t - 1),
                            RationalVector(market.assets, Rational(0)));
  }
  if (with_static) s.static_positions.assign(market.options.size(), Rational(0));
  return s;
}

Rational dynamic_gain(const Market& market, const LevelSetIndex& index,
                      const TradingStrategy& strategy, std::size_t path) {
  Rational gain = 0;
  for (std::size_t t = 1; t <= market.steps; ++t) {
    const RationalVector& h =
        strategy.holdings[t - 1][index.group_of(t - 1, path)];
    gain += dot(h, market.increment(path, t));
  }
  return gain;
}

Rational total_gain(const Market& market, const LevelSetIndex& index,
                    const TradingStrategy& strategy, std::size_t path) {
  Rational gain = dynamic_gain(market, index, strategy, path);
  if (!strategy.static_positions.empty()) {
    gain += dot(strategy.static_positions, market.adjusted_option_payoffs(path));
  }
  return gain;
}

}  // namespace superhedge
