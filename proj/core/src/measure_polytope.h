#ifndef SUPERHEDGE_SRC_MEASURE_POLYTOPE_H_
#define SUPERHEDGE_SRC_MEASURE_POLYTOPE_H_

#include <optional>
#include <vector>

#include "simplex_tableau.h"
#include "superhedge/measure.h"

namespace superhedge::internal {

// The polytope of martingale measures supported on `domain`, held as a
// simplex tableau on which phase one has already run. Each maximisation
// starts from a copy of that feasible basis.
class MeasurePolytope {
 public:
  MeasurePolytope(const Market& market, const LevelSetIndex& index,
                  const PathSet& domain, bool with_options);

  bool empty() const { return !feasible_; }
  const PathSet& domain() const { return domain_; }

  struct Optimum {
    Rational value;
    MeasureVector measure;  // vertex measure over all market paths
  };

  // max sum Q(w) f(w) over the polytope; `values` has one entry per market
  // path. The polytope is bounded, so a non-empty one always has an optimum.
  std::optional<Optimum> maximize(const RationalVector& values) const;

  // Distinct vertices, by pivoting between adjacent feasible bases. Stops
  // once `cap` vertices are found; `truncated` reports whether any basis was
  // left unexplored.
  std::vector<MeasureVector> vertices(std::size_t cap, bool& truncated) const;

 private:
  MeasureVector to_measure(const RationalVector& columns) const;

  std::size_t num_paths_ = 0;
  PathSet domain_;
  bool feasible_ = false;
  std::optional<SimplexTableau> tableau_;
};

}  // namespace superhedge::internal

#endif  // SUPERHEDGE_SRC_MEASURE_POLYTOPE_H_
