#ifndef SUPERHEDGE_MEASURE_H_
#define SUPERHEDGE_MEASURE_H_

#include <vector>

#include "superhedge/lp.h"
#include "superhedge/market.h"

namespace superhedge {

// Probability on paths. `support` is exactly the set of positive weights.
struct MeasureVector {
  RationalVector weights;
  PathSet support;

  friend bool operator==(const MeasureVector&, const MeasureVector&) = default;
};

MeasureVector make_measure(RationalVector weights);

// Linear description of the martingale measures carried by `domain`.
//
// Column k of every row is the weight of path domain.members()[k]. Rows:
// total mass one; for every t >= 1, every level-set group G at t - 1 and every
// asset i, sum over G of Q * dS_t^i = 0; with options, sum of Q * (phi^j - c^j)
// = 0 for each option. Rows that are identically zero are omitted.
std::vector<Constraint> martingale_constraints(const Market& market,
                                               const LevelSetIndex& index,
                                               const PathSet& domain,
                                               bool with_options);

// Expands weights indexed by domain position to one weight per market path.
RationalVector expand_weights(const PathSet& domain,
                              const RationalVector& local,
                              std::size_t num_paths);

// Exact membership test in M_f (or M_Phi with options).
bool is_martingale_measure(const Market& market, const LevelSetIndex& index,
                           const MeasureVector& measure, bool with_options);

Rational expectation(const MeasureVector& measure, const RationalVector& values);

// Equal-weight mixture; convexity keeps the martingale property.
MeasureVector average(const std::vector<MeasureVector>& measures);

}  // namespace superhedge

#endif  // SUPERHEDGE_MEASURE_H_
