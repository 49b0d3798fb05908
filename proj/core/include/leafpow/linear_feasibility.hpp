#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "leafpow/rational.hpp"

namespace leafpow {

using LinearTerm = std::pair<std::size_t, Rational>;

// Exact rational linear program
//
//   minimize  c . x   subject to  x_j >= lower_j,  rows added incrementally,
//
// with c >= 0 so that the all-at-lower-bound basis is dual feasible. Each added
// row is folded into the current tableau and the dual simplex restores primal
// feasibility, so the object can be copied to checkpoint a branch and extended
// row by row. Pivoting follows Bland's rule in its dual form, which rules out
// cycling; the reported optimum is a basic solution.
class ExactLp {
 public:
  ExactLp(std::size_t variables, std::vector<Rational> lower_bounds, std::vector<Rational> costs);
  // All lower bounds equal to `lower`, zero objective.
  ExactLp(std::size_t variables, const Rational& lower);

  std::size_t variable_count() const { return lower_.size(); }
  std::size_t row_count() const { return rows_; }

  // Each returns false once the system has become infeasible; further rows
  // are ignored after that.
  bool add_at_least(std::span<const LinearTerm> terms, const Rational& rhs);
  bool add_at_most(std::span<const LinearTerm> terms, const Rational& rhs);
  bool add_equal(std::span<const LinearTerm> terms, const Rational& rhs);

  bool feasible() const { return feasible_; }
  // Optimal basic solution; only meaningful while feasible().
  std::vector<Rational> solution() const;
  Rational objective() const;
  std::size_t pivots() const { return pivots_; }

 private:
  // A basic variable is identified by an id: ids < variable_count() are the
  // shifted structural variables, larger ids are row surplus variables.
  struct Row {
    std::size_t basic;
    Rational value;
    std::vector<Rational> coeff;  // one entry per nonbasic column
  };

  bool restore();
  void pivot(std::size_t row, std::size_t col);

  std::vector<Rational> lower_;
  std::vector<Rational> cost_;
  std::vector<std::size_t> column_var_;      // nonbasic variable per column
  std::vector<std::size_t> basic_row_of_;    // structural var -> row, or npos
  std::vector<Row> tableau_;
  std::vector<Rational> reduced_;            // reduced cost per column
  Rational objective_shift_;
  std::size_t rows_ = 0;
  std::size_t next_id_;
  std::size_t pivots_ = 0;
  bool feasible_ = true;
};

}  // namespace leafpow
