#include "superhedge/lp.h"

#include <stdexcept>
#include <string>

#include "simplex_tableau.h"

namespace superhedge {
namespace {

using internal::SimplexTableau;

// How an original variable is expressed through nonnegative columns.
struct VariableMap {
  enum class Kind { kShifted, kMirrored, kSplit } kind = Kind::kSplit;
  std::size_t column = 0;  // x' (or x+ for kSplit; x- is column + 1)
  Rational offset;         // l for kShifted, u for kMirrored
};

struct StandardForm {
  std::vector<VariableMap> variables;
  std::size_t num_structural = 0;
  std::vector<RationalVector> rows;  // length = total columns
  RationalVector rhs;
  std::vector<std::size_t> initial_basis;
  std::vector<int> flip;  // +1 / -1 per row
  std::size_t num_original_rows = 0;
  std::size_t artificial_begin = 0;
  RationalVector costs;  // minimisation costs over all columns
};

StandardForm to_standard_form(const LinearProgram& lp) {
  const std::size_t n = lp.num_variables();
  StandardForm sf;
  sf.variables.resize(n);

  std::vector<std::pair<std::size_t, Rational>> upper_rows;  // column, width
  std::size_t next = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const VariableBounds b = lp.bounds_of(j);
    VariableMap& v = sf.variables[j];
    v.column = next;
    if (b.lower) {
      v.kind = VariableMap::Kind::kShifted;
      v.offset = *b.lower;
      if (b.upper) upper_rows.emplace_back(next, *b.upper - *b.lower);
      next += 1;
    } else if (b.upper) {
      v.kind = VariableMap::Kind::kMirrored;
      v.offset = *b.upper;
      next += 1;
    } else {
      v.kind = VariableMap::Kind::kSplit;
      next += 2;
    }
  }
  sf.num_structural = next;
  sf.num_original_rows = lp.constraints.size();

  // Structural part of every row and its adjusted right-hand side.
  std::vector<RationalVector> structural;
  RationalVector rhs;
  std::vector<Relation> relations;
  for (const Constraint& c : lp.constraints) {
    RationalVector row(sf.num_structural, Rational(0));
    Rational b = c.rhs;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& a = c.coefficients[j];
      if (sgn(a) == 0) continue;
      const VariableMap& v = sf.variables[j];
      switch (v.kind) {
        case VariableMap::Kind::kShifted:
          row[v.column] += a;
          b -= a * v.offset;
          break;
        case VariableMap::Kind::kMirrored:
          row[v.column] -= a;
          b -= a * v.offset;
          break;
        case VariableMap::Kind::kSplit:
          row[v.column] += a;
          row[v.column + 1] -= a;
          break;
      }
    }
    structural.push_back(std::move(row));
    rhs.push_back(std::move(b));
    relations.push_back(c.relation);
  }
  for (auto& [column, width] : upper_rows) {
    RationalVector row(sf.num_structural, Rational(0));
    row[column] = 1;
    structural.push_back(std::move(row));
    rhs.push_back(width);
    relations.push_back(Relation::kLessEqual);
  }

  const std::size_t m = structural.size();
  std::size_t num_slacks = 0;
  for (Relation r : relations) num_slacks += r != Relation::kEqual;

  // Decide row orientation and which rows need an artificial.
  sf.flip.assign(m, 1);
  std::vector<bool> slack_basic(m, false);
  std::size_t num_artificial = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(rhs[i]) < 0) sf.flip[i] = -1;
    const int slack_sign = relations[i] == Relation::kLessEqual      ? 1
                           : relations[i] == Relation::kGreaterEqual ? -1
                                                                     : 0;
    slack_basic[i] = slack_sign != 0 && slack_sign * sf.flip[i] == 1;
    if (!slack_basic[i]) ++num_artificial;
  }

  const std::size_t slack_begin = sf.num_structural;
  sf.artificial_begin = slack_begin + num_slacks;
  const std::size_t total = sf.artificial_begin + num_artificial;
  std::size_t slack = slack_begin;
  std::size_t artificial = sf.artificial_begin;
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector row(total, Rational(0));
    for (std::size_t j = 0; j < sf.num_structural; ++j) {
      if (sgn(structural[i][j]) != 0) row[j] = sf.flip[i] * structural[i][j];
    }
    std::size_t basic = 0;
    if (relations[i] != Relation::kEqual) {
      const int slack_sign = relations[i] == Relation::kLessEqual ? 1 : -1;
      row[slack] = slack_sign * sf.flip[i];
      if (slack_basic[i]) basic = slack;
      ++slack;
    }
    if (!slack_basic[i]) {
      row[artificial] = 1;
      basic = artificial++;
    }
    sf.rows.push_back(std::move(row));
    sf.rhs.push_back(sf.flip[i] * rhs[i]);
    sf.initial_basis.push_back(basic);
  }

  sf.costs.assign(total, Rational(0));
  const int sense = lp.sense == Sense::kMinimize ? 1 : -1;
  for (std::size_t j = 0; j < n; ++j) {
    const Rational& c = lp.objective[j];
    if (sgn(c) == 0) continue;
    const VariableMap& v = sf.variables[j];
    switch (v.kind) {
      case VariableMap::Kind::kShifted:
        sf.costs[v.column] = sense * c;
        break;
      case VariableMap::Kind::kMirrored:
        sf.costs[v.column] = -sense * c;
        break;
      case VariableMap::Kind::kSplit:
        sf.costs[v.column] = sense * c;
        sf.costs[v.column + 1] = -sense * c;
        break;
    }
  }
  return sf;
}

RationalVector recover_solution(const StandardForm& sf,
                                const RationalVector& columns) {
  RationalVector x;
  x.reserve(sf.variables.size());
  for (const VariableMap& v : sf.variables) {
    switch (v.kind) {
      case VariableMap::Kind::kShifted:
        x.push_back(v.offset + columns[v.column]);
        break;
      case VariableMap::Kind::kMirrored:
        x.push_back(v.offset - columns[v.column]);
        break;
      case VariableMap::Kind::kSplit:
        x.push_back(columns[v.column] - columns[v.column + 1]);
        break;
    }
  }
  return x;
}

RationalVector row_activity(const LinearProgram& lp, const RationalVector& y) {
  RationalVector activity(lp.num_variables(), Rational(0));
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    if (sgn(y[i]) == 0) continue;
    const RationalVector& row = lp.constraints[i].coefficients;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (sgn(row[j]) != 0) activity[j] += y[i] * row[j];
    }
  }
  return activity;
}

}  // namespace

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

void LinearProgram::validate() const {
  const std::size_t n = num_variables();
  if (!bounds.empty() && bounds.size() != n) {
    throw std::invalid_argument("LinearProgram: bounds size " +
                                std::to_string(bounds.size()) + " != " +
                                std::to_string(n) + " variables");
  }
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    if (constraints[i].coefficients.size() != n) {
      throw std::invalid_argument("LinearProgram: constraint " +
                                  std::to_string(i) + " has wrong length");
    }
  }
  for (const VariableBounds& b : bounds) {
    if (b.lower && b.upper && *b.lower > *b.upper) {
      throw std::invalid_argument("LinearProgram: lower bound above upper");
    }
  }
}

LpOutcome solve(const LinearProgram& lp) {
  lp.validate();
  const StandardForm sf = to_standard_form(lp);
  SimplexTableau tableau(sf.rows, sf.rhs, sf.initial_basis, sf.artificial_begin);

  const bool minimize = lp.sense == Sense::kMinimize;
  LpOutcome outcome;

  if (!tableau.find_feasible_basis()) {
    // Phase-one duals u satisfy u^T A' <= 0 and u^T b' > 0.
    const RationalVector u = tableau.row_duals();
    RationalVector y(sf.num_original_rows);
    for (std::size_t i = 0; i < sf.num_original_rows; ++i) {
      y[i] = -sf.flip[i] * u[i];
    }
    for (const Rational& v : y) {
      if (sgn(v) != 0) {
        const Rational scale = abs(v);
        for (Rational& w : y) w /= scale;
        break;
      }
    }
    outcome.status = LpStatus::kInfeasible;
    outcome.value = minimize ? ExtendedRational::plus_infinity()
                             : ExtendedRational::minus_infinity();
    outcome.farkas = std::move(y);
    return outcome;
  }

  tableau.set_costs(sf.costs);
  if (tableau.optimize() == SimplexTableau::RunStatus::kUnbounded) {
    outcome.status = LpStatus::kUnbounded;
    outcome.value = minimize ? ExtendedRational::minus_infinity()
                             : ExtendedRational::plus_infinity();
    return outcome;
  }

  outcome.status = LpStatus::kOptimal;
  outcome.solution = recover_solution(sf, tableau.basic_solution());
  outcome.value = dot(lp.objective, outcome.solution);

  // Duals of the minimisation form, mapped back to original rows and sense.
  const RationalVector u = tableau.row_duals();
  const int sense = minimize ? 1 : -1;
  outcome.duals.resize(sf.num_original_rows);
  for (std::size_t i = 0; i < sf.num_original_rows; ++i) {
    outcome.duals[i] = sense * sf.flip[i] * u[i];
  }
  const RationalVector activity = row_activity(lp, outcome.duals);
  outcome.reduced_costs.resize(lp.num_variables());
  for (std::size_t j = 0; j < lp.num_variables(); ++j) {
    outcome.reduced_costs[j] = lp.objective[j] - activity[j];
  }
  return outcome;
}

FeasibilityOutcome solve_feasibility(std::span<const Constraint> constraints,
                                     std::size_t num_variables,
                                     std::span<const VariableBounds> bounds) {
  LinearProgram lp;
  lp.objective.assign(num_variables, Rational(0));
  lp.constraints.assign(constraints.begin(), constraints.end());
  lp.bounds.assign(bounds.begin(), bounds.end());
  LpOutcome outcome = solve(lp);
  FeasibilityOutcome result;
  result.feasible = outcome.status == LpStatus::kOptimal;
  if (result.feasible) {
    result.witness = std::move(outcome.solution);
  } else {
    result.certificate = std::move(outcome.farkas);
  }
  return result;
}

bool satisfies(const LinearProgram& lp, const RationalVector& x) {
  if (x.size() != lp.num_variables()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const VariableBounds b = lp.bounds_of(j);
    if (b.lower && x[j] < *b.lower) return false;
    if (b.upper && x[j] > *b.upper) return false;
  }
  for (const Constraint& c : lp.constraints) {
    const int s = cmp(dot(c.coefficients, x), c.rhs);
    switch (c.relation) {
      case Relation::kLessEqual:
        if (s > 0) return false;
        break;
      case Relation::kEqual:
        if (s != 0) return false;
        break;
      case Relation::kGreaterEqual:
        if (s < 0) return false;
        break;
    }
  }
  return true;
}

bool is_farkas_certificate(std::span<const Constraint> constraints,
                           std::size_t num_variables,
                           std::span<const VariableBounds> bounds,
                           const RationalVector& certificate) {
  if (certificate.size() != constraints.size()) return false;
  RationalVector combined(num_variables, Rational(0));
  Rational rhs = 0;
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const Rational& y = certificate[i];
    const Constraint& c = constraints[i];
    if (c.relation == Relation::kLessEqual && sgn(y) < 0) return false;
    if (c.relation == Relation::kGreaterEqual && sgn(y) > 0) return false;
    if (sgn(y) == 0) continue;
    for (std::size_t j = 0; j < num_variables; ++j) {
      if (sgn(c.coefficients[j]) != 0) combined[j] += y * c.coefficients[j];
    }
    rhs += y * c.rhs;
  }
  // Smallest value of combined^T x over the bound box must exceed rhs.
  Rational minimum = 0;
  for (std::size_t j = 0; j < num_variables; ++j) {
    const int s = sgn(combined[j]);
    if (s == 0) continue;
    const VariableBounds b =
        bounds.empty() ? VariableBounds::free() : bounds[j];
    const std::optional<Rational>& active = s > 0 ? b.lower : b.upper;
    if (!active) return false;
    minimum += combined[j] * *active;
  }
  return minimum > rhs;
}

Rational dual_objective(const LinearProgram& lp, const LpOutcome& outcome) {
  if (outcome.status != LpStatus::kOptimal) {
    throw std::invalid_argument("dual_objective: outcome is not optimal");
  }
  Rational value = 0;
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    value += outcome.duals[i] * lp.constraints[i].rhs;
  }
  const bool minimize = lp.sense == Sense::kMinimize;
  for (std::size_t j = 0; j < lp.num_variables(); ++j) {
    const Rational& r = outcome.reduced_costs[j];
    const int s = sgn(r);
    if (s == 0) continue;
    const VariableBounds b = lp.bounds_of(j);
    const bool at_lower = (s > 0) == minimize;
    const std::optional<Rational>& bound = at_lower ? b.lower : b.upper;
    if (!bound) {
      throw std::logic_error("dual_objective: reduced cost on a free side");
    }
    value += r * *bound;
  }
  return value;
}

}  // namespace superhedge
