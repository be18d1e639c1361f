#ifndef SUPERHEDGE_SRC_SIMPLEX_TABLEAU_H_
#define SUPERHEDGE_SRC_SIMPLEX_TABLEAU_H_

#include <cstddef>
#include <vector>

#include "superhedge/rational.h"

namespace superhedge::internal {

// Dense simplex tableau for  min c^T x  s.t.  A x = b, x >= 0, b >= 0.
//
// Columns [artificial_begin, num_columns) are artificial. The caller supplies
// an initial basis whose columns form an identity matrix in A, so the
// tableau column of the row-i initial basic variable always equals B^{-1} e_i.
class SimplexTableau {
 public:
  enum class RunStatus { kOptimal, kUnbounded };

  SimplexTableau(std::vector<RationalVector> rows, RationalVector rhs,
                 std::vector<std::size_t> initial_basis,
                 std::size_t artificial_begin);

  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_columns() const { return num_columns_; }
  std::size_t artificial_begin() const { return artificial_begin_; }
  bool is_artificial(std::size_t column) const {
    return column >= artificial_begin_;
  }

  const Rational& entry(std::size_t row, std::size_t column) const {
    return rows_[row][column];
  }
  const Rational& rhs(std::size_t row) const { return rhs_[row]; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const std::vector<std::size_t>& initial_basis() const {
    return initial_basis_;
  }

  // Installs a cost vector (one entry per column) and recomputes reduced
  // costs for the current basis.
  void set_costs(RationalVector costs);
  const Rational& objective_value() const { return objective_; }

  // Bland's rule: smallest-index improving column, ratio ties broken by the
  // smallest basic column index. Artificial columns never enter.
  RunStatus optimize();

  // Phase one: minimise the sum of artificials. Returns true if the
  // original system is feasible; the tableau is then left on a basis where
  // artificials that remain basic sit at zero on redundant rows.
  bool find_feasible_basis();

  // Removes rows whose basic variable is still artificial after phase one and
  // then all artificial columns. Only valid after find_feasible_basis().
  void drop_artificials();

  void pivot(std::size_t row, std::size_t column);

  // y^T = c_B^T B^{-1}, one entry per row.
  RationalVector row_duals() const;
  // Value of every column in the current basic solution.
  RationalVector basic_solution() const;

  // Rows eligible as leaving row for `column` under the minimum-ratio test.
  std::vector<std::size_t> min_ratio_rows(std::size_t column) const;

 private:
  std::vector<RationalVector> rows_;
  RationalVector rhs_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> initial_basis_;
  std::size_t num_columns_ = 0;
  std::size_t artificial_begin_ = 0;

  RationalVector costs_;
  RationalVector reduced_;
  Rational objective_;
};

}  // namespace superhedge::internal

#endif  // SUPERHEDGE_SRC_SIMPLEX_TABLEAU_H_
