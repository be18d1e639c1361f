#include "superhedge/market.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace superhedge {

RationalVector Market::increment(std::size_t path, std::size_t t) const {
  RationalVector delta(assets);
  const Path& p = paths[path];
  for (std::size_t i = 0; i < assets; ++i) {
    delta[i] = p.prices[i][t] - p.prices[i][t - 1];
  }
  return delta;
}

RationalVector Market::adjusted_option_payoffs(std::size_t path) const {
  RationalVector values(options.size());
  for (std::size_t j = 0; j < options.size(); ++j) {
    values[j] = options[j].payoff[path] - options[j].cost;
  }
  return values;
}

void Market::validate() const {
  if (assets == 0) throw ParseError("market: \"assets\" must be positive");
  if (steps == 0) throw ParseError("market: \"steps\" must be positive");
  if (paths.empty()) throw ParseError("market: at least one path required");
  std::set<std::string> ids;
  for (const Path& p : paths) {
    if (!ids.insert(p.id).second) {
      throw ParseError("path \"" + p.id + "\": duplicate id");
    }
    if (p.prices.size() != assets) {
      throw ParseError("path \"" + p.id + "\": \"prices\" must have " +
                       std::to_string(assets) + " rows");
    }
    for (const RationalVector& row : p.prices) {
      if (row.size() != steps + 1) {
        throw ParseError("path \"" + p.id + "\": every \"prices\" row must have " +
                         std::to_string(steps + 1) + " columns");
      }
    }
  }
  std::set<std::string> option_ids;
  for (const StaticOption& o : options) {
    if (!option_ids.insert(o.id).second) {
      throw ParseError("option \"" + o.id + "\": duplicate id");
    }
    if (o.payoff.size() != paths.size()) {
      throw ParseError("option \"" + o.id + "\": \"payoff\" must have " +
                       std::to_string(paths.size()) + " entries");
    }
  }
}

PathSet::PathSet(std::initializer_list<std::size_t> members)
    : PathSet(std::vector<std::size_t>(members)) {}

PathSet::PathSet(std::vector<std::size_t> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

PathSet PathSet::all(std::size_t num_paths) {
  std::vector<std::size_t> members(num_paths);
  for (std::size_t i = 0; i < num_paths; ++i) members[i] = i;
  return PathSet(std::move(members));
}

PathSet PathSet::from_mask(const std::vector<bool>& mask) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) members.push_back(i);
  }
  return PathSet(std::move(members));
}

bool PathSet::contains(std::size_t path) const {
  return std::binary_search(members_.begin(), members_.end(), path);
}

std::vector<bool> PathSet::mask(std::size_t num_paths) const {
  std::vector<bool> m(num_paths, false);
  for (std::size_t i : members_) m.at(i) = true;
  return m;
}

PathSet PathSet::complement(std::size_t num_paths) const {
  std::vector<bool> m = mask(num_paths);
  m.flip();
  return from_mask(m);
}

bool PathSet::is_subset_of(const PathSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

LevelSetIndex::LevelSetIndex(const Market& market) {
  const std::size_t n = market.num_paths();
  groups_.resize(market.steps + 1);
  group_of_.assign(market.steps + 1, std::vector<std::size_t>(n));

  // Refine group by group: paths share a group at t iff they share one at
  // t - 1 and agree on column t.
  std::vector<std::size_t> previous(n, 0);
  for (std::size_t t = 0; t <= market.steps; ++t) {
    std::map<std::pair<std::size_t, RationalVector>, std::size_t> lookup;
    for (std::size_t p = 0; p < n; ++p) {
      RationalVector column(market.assets);
      for (std::size_t i = 0; i < market.assets; ++i) {
        column[i] = market.paths[p].prices[i][t];
      }
      auto [it, inserted] = lookup.try_emplace(
          {t == 0 ? 0 : previous[p], std::move(column)}, groups_[t].size());
      if (inserted) groups_[t].emplace_back();
      groups_[t][it->second].push_back(p);
      group_of_[t][p] = it->second;
    }
    previous = group_of_[t];
  }
}

std::size_t LevelSetIndex::parent(std::size_t t, std::size_t group) const {
  return group_of_[t - 1][groups_[t][group].front()];
}

LevelSetIndex build_level_sets(const Market& market) {
  return LevelSetIndex(market);
}

PathSet project_support(const LevelSetIndex& index, const PathSet& next,
                        std::size_t t) {
  if (t >= index.steps()) {
    throw std::invalid_argument("project_support: t must be below steps");
  }
  std::set<std::size_t> touched;
  for (std::size_t p : next) touched.insert(index.group_of(t, p));
  std::vector<std::size_t> members;
  for (std::size_t g : touched) {
    const auto& group = index.group_members(t, g);
    members.insert(members.end(), group.begin(), group.end());
  }
  return PathSet(std::move(members));
}

Market restrict_market(const Market& market, const PathSet& paths) {
  Market result;
  result.assets = market.assets;
  result.steps = market.steps;
  for (std::size_t p : paths) result.paths.push_back(market.paths[p]);
  for (const StaticOption& o : market.options) {
    StaticOption r{o.id, {}, o.cost};
    for (std::size_t p : paths) r.payoff.push_back(o.payoff[p]);
    result.options.push_back(std::move(r));
  }
  return result;
}

Payoff restrict_payoff(const Payoff& payoff, const PathSet& paths) {
  Payoff result;
  for (std::size_t p : paths) result.values.push_back(payoff.values[p]);
  return result;
}

Market permute_market(const Market& market,
                      const std::vector<std::size_t>& order) {
  Market result;
  result.assets = market.assets;
  result.steps = market.steps;
  for (std::size_t p : order) result.paths.push_back(market.paths[p]);
  for (const StaticOption& o : market.options) {
    StaticOption r{o.id, {}, o.cost};
    for (std::size_t p : order) r.payoff.push_back(o.payoff[p]);
    result.options.push_back(std::move(r));
  }
  return result;
}

Payoff permute_payoff(const Payoff& payoff,
                      const std::vector<std::size_t>& order) {
  Payoff result;
  for (std::size_t p : order) result.values.push_back(payoff.values[p]);
  return result;
}

bool has_single_root(const Market& market) {
  for (const Path& p : market.paths) {
    for (std::size_t i = 0; i < market.assets; ++i) {
      if (p.prices[i][0] != market.paths.front().prices[i][0]) return false;
    }
  }
  return true;
}

}  // namespace superhedge
