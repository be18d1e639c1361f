#ifndef SUPERHEDGE_SRC_STRATEGY_LP_H_
#define SUPERHEDGE_SRC_STRATEGY_LP_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "superhedge/market.h"
#include "superhedge/strategy.h"

namespace superhedge::internal {

// Column layout of a trading strategy inside a larger LP. Only level-set
// groups met by `domain` get columns; the others are held at zero.
class StrategyColumns {
 public:
  static constexpr std::size_t kNone = SIZE_MAX;

  StrategyColumns(const Market& market, const LevelSetIndex& index,
                  const PathSet& domain, std::size_t offset, bool with_static);

  std::size_t begin() const { return begin_; }
  std::size_t end() const { return end_; }

  // Adds the coefficients of (H . S)_T(path) [+ h (Phi - c)(path)] to `row`.
  void add_gain(RationalVector& row, std::size_t path) const;

  TradingStrategy extract(const RationalVector& solution) const;

 private:
  const Market& market_;
  const LevelSetIndex& index_;
  bool with_static_ = false;
  std::size_t begin_ = 0;
  std::size_t end_ = 0;
  std::size_t static_begin_ = 0;
  std::vector<std::vector<std::size_t>> block_;  // [t - 1][group]
};

}  // namespace superhedge::internal

#endif  // SUPERHEDGE_SRC_STRATEGY_LP_H_
