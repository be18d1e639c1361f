#include "measure_polytope.h"

#include <algorithm>
#include <deque>
#include <set>

namespace superhedge::internal {
namespace {

// Bases explored before vertex enumeration gives up on a degenerate polytope.
constexpr std::size_t kMaxBases = 20000;

}  // namespace

MeasurePolytope::MeasurePolytope(const Market& market,
                                 const LevelSetIndex& index,
                                 const PathSet& domain, bool with_options)
    : num_paths_(market.num_paths()), domain_(domain) {
  if (domain_.empty()) return;
  const std::vector<Constraint> constraints =
      martingale_constraints(market, index, domain_, with_options);
  const std::size_t n = domain_.size();
  const std::size_t m = constraints.size();

  std::vector<RationalVector> rows;
  RationalVector rhs;
  std::vector<std::size_t> basis;
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector row(n + m, Rational(0));
    std::copy(constraints[i].coefficients.begin(),
              constraints[i].coefficients.end(), row.begin());
    row[n + i] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(constraints[i].rhs);  // 1 or 0, never negative
    basis.push_back(n + i);
  }
  SimplexTableau tableau(std::move(rows), std::move(rhs), std::move(basis), n);
  feasible_ = tableau.find_feasible_basis();
  if (!feasible_) return;
  tableau.drop_artificials();
  tableau_ = std::move(tableau);
}

MeasureVector MeasurePolytope::to_measure(const RationalVector& columns) const {
  return make_measure(expand_weights(domain_, columns, num_paths_));
}

std::optional<MeasurePolytope::Optimum> MeasurePolytope::maximize(
    const RationalVector& values) const {
  if (!feasible_) return std::nullopt;
  SimplexTableau work = *tableau_;
  RationalVector costs(domain_.size());
  for (std::size_t k = 0; k < domain_.size(); ++k) {
    costs[k] = -values[domain_.members()[k]];
  }
  work.set_costs(std::move(costs));
  work.optimize();  // bounded: the polytope lies in the simplex
  return Optimum{-work.objective_value(), to_measure(work.basic_solution())};
}

std::vector<MeasureVector> MeasurePolytope::vertices(std::size_t cap,
                                                     bool& truncated) const {
  truncated = false;
  std::vector<MeasureVector> found;
  if (!feasible_ || cap == 0) {
    truncated = feasible_ && cap == 0;
    return found;
  }

  std::set<RationalVector> seen_vertices;
  std::set<std::vector<std::size_t>> seen_bases;
  std::deque<SimplexTableau> queue;

  auto sorted_basis = [](const SimplexTableau& t) {
    std::vector<std::size_t> b = t.basis();
    std::sort(b.begin(), b.end());
    return b;
  };

  seen_bases.insert(sorted_basis(*tableau_));
  queue.push_back(*tableau_);
  while (!queue.empty()) {
    SimplexTableau current = std::move(queue.front());
    queue.pop_front();

    RationalVector point = current.basic_solution();
    if (seen_vertices.insert(point).second) {
      if (found.size() == cap) {
        truncated = true;
        break;
      }
      found.push_back(to_measure(point));
    }

    std::vector<bool> basic(current.num_columns(), false);
    for (std::size_t b : current.basis()) basic[b] = true;
    for (std::size_t column = 0; column < current.num_columns(); ++column) {
      if (basic[column]) continue;
      for (std::size_t row : current.min_ratio_rows(column)) {
        SimplexTableau next = current;
        next.pivot(row, column);
        if (!seen_bases.insert(sorted_basis(next)).second) continue;
        if (seen_bases.size() > kMaxBases) {
          truncated = true;
          return found;
        }
        queue.push_back(std::move(next));
      }
    }
  }
  return found;
}

}  // namespace superhedge::internal
