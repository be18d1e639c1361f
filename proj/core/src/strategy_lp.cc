#include "strategy_lp.h"

namespace superhedge::internal {

StrategyColumns::StrategyColumns(const Market& market,
                                 const LevelSetIndex& index,
                                 const PathSet& domain, std::size_t offset,
                                 bool with_static)
    : market_(market), index_(index), with_static_(with_static),
      begin_(offset) {
  std::size_t next = offset;
  block_.resize(market.steps);
  for (std::size_t t = 1; t <= market.steps; ++t) {
    block_[t - 1].assign(index.num_groups(t - 1), kNone);
    for (std::size_t p : domain) {
      std::size_t& b = block_[t - 1][index.group_of(t - 1, p)];
      if (b == kNone) {
        b = next;
        next += market.assets;
      }
    }
  }
  static_begin_ = next;
  if (with_static_) next += market.options.size();
  end_ = next;
}

void StrategyColumns::add_gain(RationalVector& row, std::size_t path) const {
  for (std::size_t t = 1; t <= market_.steps; ++t) {
    const std::size_t b = block_[t - 1][index_.group_of(t - 1, path)];
    const RationalVector delta = market_.increment(path, t);
    for (std::size_t i = 0; i < market_.assets; ++i) row[b + i] += delta[i];
  }
  if (with_static_) {
    const RationalVector adjusted = market_.adjusted_option_payoffs(path);
    for (std::size_t j = 0; j < adjusted.size(); ++j) {
      row[static_begin_ + j] += adjusted[j];
    }
  }
}

TradingStrategy StrategyColumns::extract(const RationalVector& solution) const {
  TradingStrategy s = TradingStrategy::zero(market_, index_, with_static_);
  for (std::size_t t = 1; t <= market_.steps; ++t) {
    for (std::size_t g = 0; g < block_[t - 1].size(); ++g) {
      const std::size_t b = block_[t - 1][g];
      if (b == kNone) continue;
      for (std::size_t i = 0; i < market_.assets; ++i) {
        s.holdings[t - 1][g][i] = solution[b + i];
      }
    }
  }
  if (with_static_) {
    for (std::size_t j = 0; j < market_.options.size(); ++j) {
      s.static_positions[j] = solution[static_begin_ + j];
    }
  }
  return s;
}

}  // namespace superhedge::internal
