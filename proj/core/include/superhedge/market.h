#ifndef SUPERHEDGE_MARKET_H_
#define SUPERHEDGE_MARKET_H_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "superhedge/rational.h"

namespace superhedge {

// One trajectory: prices[asset][time], shape assets x (steps + 1).
struct Path {
  std::string id;
  std::vector<RationalVector> prices;
};

// Option held statically to maturity. `payoff` has one entry per path.
struct StaticOption {
  std::string id;
  RationalVector payoff;
  Rational cost;
};

// A claim: one value per path, in market path order.
struct Payoff {
  RationalVector values;
};

// Finite path-space market.
struct Market {
  std::size_t assets = 1;
  std::size_t steps = 1;
  std::vector<Path> paths;
  std::vector<StaticOption> options;

  std::size_t num_paths() const { return paths.size(); }

  // S_t - S_{t-1} for every asset; 1 <= t <= steps.
  RationalVector increment(std::size_t path, std::size_t t) const;
  // phi^j(path) - c^j for every option.
  RationalVector adjusted_option_payoffs(std::size_t path) const;

  // Throws ParseError naming the offending path or option.
  void validate() const;
};

// Sorted set of path indices.
class PathSet {
 public:
  PathSet() = default;
  PathSet(std::initializer_list<std::size_t> members);
  explicit PathSet(std::vector<std::size_t> members);

  static PathSet all(std::size_t num_paths);
  static PathSet from_mask(const std::vector<bool>& mask);

  bool contains(std::size_t path) const;
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const std::vector<std::size_t>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  std::vector<bool> mask(std::size_t num_paths) const;
  PathSet complement(std::size_t num_paths) const;
  bool is_subset_of(const PathSet& other) const;

  friend bool operator==(const PathSet&, const PathSet&) = default;

 private:
  std::vector<std::size_t> members_;
};

// Partition of paths by equal price history S_{0:t}, for every t.
//
// Groups at each t are numbered in order of their first member, so the
// labelling depends on path order while the partition does not.
class LevelSetIndex {
 public:
  explicit LevelSetIndex(const Market& market);

  std::size_t steps() const { return groups_.size() - 1; }
  std::size_t num_groups(std::size_t t) const { return groups_[t].size(); }
  const std::vector<std::size_t>& group_members(std::size_t t,
                                                std::size_t group) const {
    return groups_[t][group];
  }
  std::size_t group_of(std::size_t t, std::size_t path) const {
    return group_of_[t][path];
  }
  // Group at t - 1 containing `group` at t.
  std::size_t parent(std::size_t t, std::size_t group) const;

 private:
  std::vector<std::vector<std::vector<std::size_t>>> groups_;
  std::vector<std::vector<std::size_t>> group_of_;
};

LevelSetIndex build_level_sets(const Market& market);

// All paths whose prefix up to t matches the prefix of some member of
// `next`. Precondition: t < steps.
PathSet project_support(const LevelSetIndex& index, const PathSet& next,
                        std::size_t t);

// Sub-market on the given paths (kept in order), options restricted alike.
Market restrict_market(const Market& market, const PathSet& paths);
Payoff restrict_payoff(const Payoff& payoff, const PathSet& paths);

// Reorders paths: result.paths[i] = market.paths[order[i]].
Market permute_market(const Market& market,
                      const std::vector<std::size_t>& order);
Payoff permute_payoff(const Payoff& payoff,
                      const std::vector<std::size_t>& order);

// True when every path starts from the same S_0.
bool has_single_root(const Market& market);

}  // namespace superhedge

#endif  // SUPERHEDGE_MARKET_H_
