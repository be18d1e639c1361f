#include "simplex_tableau.h"

#include <stdexcept>
#include <utility>

namespace superhedge::internal {

SimplexTableau::SimplexTableau(std::vector<RationalVector> rows,
                               RationalVector rhs,
                               std::vector<std::size_t> initial_basis,
                               std::size_t artificial_begin)
    : rows_(std::move(rows)),
      rhs_(std::move(rhs)),
      basis_(initial_basis),
      initial_basis_(std::move(initial_basis)),
      artificial_begin_(artificial_begin) {
  num_columns_ = rows_.empty() ? artificial_begin_ : rows_.front().size();
  if (rhs_.size() != rows_.size() || basis_.size() != rows_.size()) {
    throw std::invalid_argument("SimplexTableau: inconsistent dimensions");
  }
  costs_.assign(num_columns_, Rational(0));
  reduced_.assign(num_columns_, Rational(0));
}

void SimplexTableau::set_costs(RationalVector costs) {
  costs_ = std::move(costs);
  reduced_ = costs_;
  objective_ = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational& cb = costs_[basis_[i]];
    if (sgn(cb) == 0) continue;
    objective_ += cb * rhs_[i];
    const RationalVector& row = rows_[i];
    for (std::size_t j = 0; j < num_columns_; ++j) {
      if (sgn(row[j]) != 0) reduced_[j] -= cb * row[j];
    }
  }
}

void SimplexTableau::pivot(std::size_t row, std::size_t column) {
  RationalVector& pivot_row = rows_[row];
  const Rational pivot_value = pivot_row[column];
  if (sgn(pivot_value) == 0) throw std::logic_error("pivot on zero entry");

  std::vector<std::size_t> nonzero;
  nonzero.reserve(num_columns_);
  for (std::size_t j = 0; j < num_columns_; ++j) {
    if (sgn(pivot_row[j]) != 0) {
      pivot_row[j] /= pivot_value;
      nonzero.push_back(j);
    }
  }
  rhs_[row] /= pivot_value;

  Rational factor;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i == row) continue;
    RationalVector& target = rows_[i];
    if (sgn(target[column]) == 0) continue;
    factor = target[column];
    for (std::size_t j : nonzero) target[j] -= factor * pivot_row[j];
    if (sgn(rhs_[row]) != 0) rhs_[i] -= factor * rhs_[row];
  }
  if (sgn(reduced_[column]) != 0) {
    factor = reduced_[column];
    for (std::size_t j : nonzero) reduced_[j] -= factor * pivot_row[j];
    objective_ += factor * rhs_[row];
  }
  basis_[row] = column;
}

std::vector<std::size_t> SimplexTableau::min_ratio_rows(
    std::size_t column) const {
  std::vector<std::size_t> best;
  Rational best_ratio;
  Rational ratio;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational& a = rows_[i][column];
    if (sgn(a) <= 0) continue;
    ratio = rhs_[i] / a;
    if (best.empty() || ratio < best_ratio) {
      best.assign(1, i);
      best_ratio = ratio;
    } else if (ratio == best_ratio) {
      best.push_back(i);
    }
  }
  return best;
}

SimplexTableau::RunStatus SimplexTableau::optimize() {
  for (;;) {
    std::size_t entering = num_columns_;
    for (std::size_t j = 0; j < artificial_begin_; ++j) {
      if (sgn(reduced_[j]) < 0) {
        entering = j;
        break;
      }
    }
    if (entering == num_columns_) return RunStatus::kOptimal;

    const std::vector<std::size_t> candidates = min_ratio_rows(entering);
    if (candidates.empty()) return RunStatus::kUnbounded;
    std::size_t leaving = candidates.front();
    for (std::size_t i : candidates) {
      if (basis_[i] < basis_[leaving]) leaving = i;
    }
    pivot(leaving, entering);
  }
}

bool SimplexTableau::find_feasible_basis() {
  bool any_artificial = false;
  for (std::size_t b : basis_) any_artificial |= is_artificial(b);
  if (!any_artificial) return true;

  RationalVector phase_one(num_columns_, Rational(0));
  for (std::size_t j = artificial_begin_; j < num_columns_; ++j) {
    phase_one[j] = 1;
  }
  set_costs(std::move(phase_one));
  optimize();  // bounded below by zero
  if (sgn(objective_) > 0) return false;

  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (!is_artificial(basis_[i])) continue;
    for (std::size_t j = 0; j < artificial_begin_; ++j) {
      if (sgn(rows_[i][j]) != 0) {
        pivot(i, j);
        break;
      }
    }
  }
  return true;
}

void SimplexTableau::drop_artificials() {
  std::vector<RationalVector> rows;
  RationalVector rhs;
  std::vector<std::size_t> basis;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (is_artificial(basis_[i])) continue;
    rows_[i].resize(artificial_begin_);
    rows.push_back(std::move(rows_[i]));
    rhs.push_back(std::move(rhs_[i]));
    basis.push_back(basis_[i]);
  }
  rows_ = std::move(rows);
  rhs_ = std::move(rhs);
  basis_ = std::move(basis);
  initial_basis_.clear();
  num_columns_ = artificial_begin_;
  costs_.assign(num_columns_, Rational(0));
  reduced_.assign(num_columns_, Rational(0));
  objective_ = 0;
}

RationalVector SimplexTableau::row_duals() const {
  RationalVector y(rows_.size(), Rational(0));
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t column = initial_basis_[k];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = costs_[basis_[i]];
      const Rational& a = rows_[i][column];
      if (sgn(cb) != 0 && sgn(a) != 0) y[k] += cb * a;
    }
  }
  return y;
}

RationalVector SimplexTableau::basic_solution() const {
  RationalVector x(num_columns_, Rational(0));
  for (std::size_t i = 0; i < rows_.size(); ++i) x[basis_[i]] = rhs_[i];
  return x;
}

}  // namespace superhedge::internal
