#include "superhedge/measure.h"

#include <cstdint>
#include <stdexcept>

namespace superhedge {
namespace {

bool is_zero_row(const RationalVector& row) {
  for (const Rational& a : row) {
    if (sgn(a) != 0) return false;
  }
  return true;
}

}  // namespace

MeasureVector make_measure(RationalVector weights) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (sgn(weights[i]) > 0) support.push_back(i);
  }
  return {std::move(weights), PathSet(std::move(support))};
}

std::vector<Constraint> martingale_constraints(const Market& market,
                                               const LevelSetIndex& index,
                                               const PathSet& domain,
                                               bool with_options) {
  const std::vector<std::size_t>& cols = domain.members();
  const std::size_t n = cols.size();
  std::vector<Constraint> rows;
  rows.push_back({RationalVector(n, Rational(1)), Relation::kEqual, 1});

  for (std::size_t t = 1; t <= market.steps; ++t) {
    // One block of `assets` rows per group at t - 1 met by the domain.
    std::vector<std::size_t> block(index.num_groups(t - 1), SIZE_MAX);
    std::vector<RationalVector> pending;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t g = index.group_of(t - 1, cols[k]);
      if (block[g] == SIZE_MAX) {
        block[g] = pending.size();
        for (std::size_t i = 0; i < market.assets; ++i) {
          pending.emplace_back(n, Rational(0));
        }
      }
      const RationalVector delta = market.increment(cols[k], t);
      for (std::size_t i = 0; i < market.assets; ++i) {
        pending[block[g] + i][k] = delta[i];
      }
    }
    for (RationalVector& row : pending) {
      if (!is_zero_row(row)) {
        rows.push_back({std::move(row), Relation::kEqual, 0});
      }
    }
  }

  if (with_options) {
    for (const StaticOption& o : market.options) {
      RationalVector row(n);
      for (std::size_t k = 0; k < n; ++k) row[k] = o.payoff[cols[k]] - o.cost;
      if (!is_zero_row(row)) rows.push_back({std::move(row), Relation::kEqual, 0});
    }
  }
  return rows;
}

RationalVector expand_weights(const PathSet& domain,
                              const RationalVector& local,
                              std::size_t num_paths) {
  RationalVector full(num_paths, Rational(0));
  for (std::size_t k = 0; k < domain.size(); ++k) {
    full[domain.members()[k]] = local[k];
  }
  return full;
}

bool is_martingale_measure(const Market& market, const LevelSetIndex& index,
                           const MeasureVector& measure, bool with_options) {
  if (measure.weights.size() != market.num_paths()) return false;
  Rational total = 0;
  for (const Rational& w : measure.weights) {
    if (sgn(w) < 0) return false;
    total += w;
  }
  if (total != 1) return false;
  if (measure.support != make_measure(measure.weights).support) return false;

  const PathSet everything = PathSet::all(market.num_paths());
  for (const Constraint& c :
       martingale_constraints(market, index, everything, with_options)) {
    if (dot(c.coefficients, measure.weights) != c.rhs) return false;
  }
  return true;
}

Rational expectation(const MeasureVector& measure,
                     const RationalVector& values) {
  return dot(measure.weights, values);
}

MeasureVector average(const std::vector<MeasureVector>& measures) {
  if (measures.empty()) throw std::invalid_argument("average of no measures");
  RationalVector weights(measures.front().weights.size(), Rational(0));
  for (const MeasureVector& m : measures) {
    for (std::size_t i = 0; i < weights.size(); ++i) weights[i] += m.weights[i];
  }
  const Rational count(static_cast<long>(measures.size()));
  for (Rational& w : weights) w /= count;
  return make_measure(std::move(weights));
}

}  // namespace superhedge
