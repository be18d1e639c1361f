#ifndef SUPERHEDGE_LP_H_
#define SUPERHEDGE_LP_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "superhedge/rational.h"

namespace superhedge {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class Sense { kMinimize, kMaximize };

struct Constraint {
  RationalVector coefficients;
  Relation relation = Relation::kEqual;
  Rational rhs;
};

struct VariableBounds {
  std::optional<Rational> lower;
  std::optional<Rational> upper;

  static VariableBounds free() { return {}; }
  static VariableBounds nonnegative() { return {Rational(0), std::nullopt}; }
  static VariableBounds between(Rational lo, Rational hi) {
    return {std::move(lo), std::move(hi)};
  }
};

// Dense linear program over exact rationals.
//
// `bounds` is either empty (every variable free) or holds one entry per
// variable. Every constraint row has exactly `objective.size()` entries.
struct LinearProgram {
  Sense sense = Sense::kMinimize;
  RationalVector objective;
  std::vector<Constraint> constraints;
  std::vector<VariableBounds> bounds;

  std::size_t num_variables() const { return objective.size(); }
  VariableBounds bounds_of(std::size_t j) const {
    return bounds.empty() ? VariableBounds::free() : bounds[j];
  }
  void add_constraint(RationalVector row, Relation relation, Rational rhs) {
    constraints.push_back({std::move(row), relation, std::move(rhs)});
  }

  // Throws std::invalid_argument when rows have the wrong length or a
  // variable has lower > upper.
  void validate() const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* to_string(LpStatus status);

// Result of `solve`.
//
// With status kOptimal, `solution` is a basic (vertex) solution and the dual
// pair satisfies, for either sense,
//   objective = A^T duals + reduced_costs
// with complementary slackness against `solution`.
//
// Sign conventions (minimize): duals >= 0 on >= rows, <= 0 on <= rows;
// reduced_costs > 0 only at an active lower bound, < 0 only at an active
// upper bound. Maximization flips every sign.
//
// With status kInfeasible, `farkas` holds one multiplier per constraint with
// farkas >= 0 on <= rows and <= 0 on >= rows, such that the implied row
//   (farkas^T A) x <= farkas^T b
// has no solution inside the variable bounds. It is scaled so that its first
// nonzero entry has absolute value 1.
struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  ExtendedRational value;
  RationalVector solution;
  RationalVector duals;
  RationalVector reduced_costs;
  RationalVector farkas;

  friend bool operator==(const LpOutcome&, const LpOutcome&) = default;
};

// Two-phase primal simplex with Bland's rule (first-index tie breaking).
// Deterministic and guaranteed to terminate. Unbounded problems report
// value -inf (minimize) or +inf (maximize); infeasible ones the opposite.
LpOutcome solve(const LinearProgram& lp);

struct FeasibilityOutcome {
  bool feasible = false;
  RationalVector witness;
  RationalVector certificate;
};

FeasibilityOutcome solve_feasibility(std::span<const Constraint> constraints,
                                     std::size_t num_variables,
                                     std::span<const VariableBounds> bounds = {});

// Exact checks used by tests and internal assertions.
bool satisfies(const LinearProgram& lp, const RationalVector& x);
bool is_farkas_certificate(std::span<const Constraint> constraints,
                           std::size_t num_variables,
                           std::span<const VariableBounds> bounds,
                           const RationalVector& certificate);
// Dual objective b^T duals + sum of reduced_cost * active bound. Requires an
// optimal outcome.
Rational dual_objective(const LinearProgram& lp, const LpOutcome& outcome);

}  // namespace superhedge

#endif  // SUPERHEDGE_LP_H_
