#ifndef SUPERHEDGE_POLAR_H_
#define SUPERHEDGE_POLAR_H_

#include <optional>
#include <vector>

#include "superhedge/market.h"
#include "superhedge/measure.h"
#include "superhedge/strategy.h"

namespace superhedge {

// Paths charged by some finite-support martingale measure (Omega*, or
// Omega_Phi when option constraints are active) and the complementary
// maximal polar set.
struct SupportReport {
  PathSet omega_star;
  PathSet polar_set;
  // Indexed by path. Set for members when the per-path LP produced it.
  std::vector<std::optional<MeasureVector>> witnesses;
  // One measure charging every member at once: the equal-weight average of
  // the per-path witnesses.
  std::optional<MeasureVector> uniform_witness;
  bool with_options = false;
};

// Definitional route: for every path, maximise Q(path) over the martingale
// polytope and keep the path iff the optimum is positive.
SupportReport compute_omega_star(const Market& market);
SupportReport compute_omega_phi(const Market& market);

// Iterative removal of paths charged by a one-point arbitrage, level set by
// level set, until a fixpoint. Witnesses are not produced.
SupportReport compute_omega_star_iterative(const Market& market);
// Same idea with options: each sweep solves one LP over the whole semi-static
// strategy space.
SupportReport compute_omega_phi_iterative(const Market& market);

struct OnePointArbitrage {
  TradingStrategy strategy;
  // Paths of the domain on which the strategy gains strictly.
  PathSet charged;
};

// Strategy with gain >= 0 on `domain` that is strictly positive on every
// path of the domain where some such strategy can be strictly positive.
// `charged` is empty when the domain admits no one-point arbitrage.
OnePointArbitrage find_one_point_arbitrage(const Market& market,
                                           const LevelSetIndex& index,
                                           const PathSet& domain,
                                           bool with_options);

enum class ArbitrageTag {
  kFullyArbitrageFree,
  kOnePointArbitrage,
  kNoMartingaleMeasure,
};

const char* to_string(ArbitrageTag tag);

struct ArbitrageClass {
  ArbitrageTag tag = ArbitrageTag::kFullyArbitrageFree;
  // Present unless fully arbitrage free. For kNoMartingaleMeasure it gains
  // strictly on every path.
  std::optional<TradingStrategy> witness;
  PathSet support;  // Omega_Phi
};

// Taxonomy with option constraints included; degenerates to Omega* when the
// market has no options.
ArbitrageClass classify(const Market& market);

}  // namespace superhedge

#endif  // SUPERHEDGE_POLAR_H_
