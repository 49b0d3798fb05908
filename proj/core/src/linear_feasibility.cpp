#include "leafpow/linear_feasibility.hpp"

#include <limits>
#include <stdexcept>

namespace leafpow {

namespace {
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
// Dual Bland cannot cycle; the cap only guards against a logic error.
constexpr std::size_t kPivotCap = 10'000'000;
}  // namespace

ExactLp::ExactLp(std::size_t variables, std::vector<Rational> lower_bounds,
                 std::vector<Rational> costs)
    : lower_(std::move(lower_bounds)), cost_(std::move(costs)), next_id_(variables) {
  if (lower_.size() != variables || cost_.size() != variables) {
    throw std::invalid_argument("ExactLp: bound and cost vectors must match the variable count");
  }
  for (const Rational& c : cost_) {
    if (c.sign() < 0) throw std::invalid_argument("ExactLp: costs must be nonnegative");
  }
  column_var_.resize(variables);
  for (std::size_t j = 0; j < variables; ++j) column_var_[j] = j;
  basic_row_of_.assign(variables, kNone);
  reduced_ = cost_;
}

ExactLp::ExactLp(std::size_t variables, const Rational& lower)
    : ExactLp(variables, std::vector<Rational>(variables, lower),
              std::vector<Rational>(variables)) {}

bool ExactLp::add_at_least(std::span<const LinearTerm> terms, const Rational& rhs) {
  if (!feasible_) return false;
  const std::size_t cols = column_var_.size();
  Row row{next_id_++, Rational(0), std::vector<Rational>(cols)};
  // Move to shifted variables y = x - lower, then substitute basic ones.
  Rational shifted = rhs;
  for (const auto& [var, a] : terms) {
    if (var >= lower_.size()) throw std::out_of_range("ExactLp: variable index out of range");
    if (a.is_zero()) continue;
    shifted -= a * lower_[var];
    const std::size_t r = basic_row_of_[var];
    if (r == kNone) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (column_var_[c] == var) {
          row.coeff[c] += a;
          break;
        }
      }
    } else {
      const Row& src = tableau_[r];
      row.value += a * src.value;
      for (std::size_t c = 0; c < cols; ++c) {
        if (!src.coeff[c].is_zero()) row.coeff[c] += a * src.coeff[c];
      }
    }
  }
  row.value -= shifted;
  tableau_.push_back(std::move(row));
  ++rows_;
  return restore();
}

bool ExactLp::add_at_most(std::span<const LinearTerm> terms, const Rational& rhs) {
  std::vector<LinearTerm> negated(terms.begin(), terms.end());
  for (auto& term : negated) term.second = -term.second;
  return add_at_least(negated, -rhs);
}

bool ExactLp::add_equal(std::span<const LinearTerm> terms, const Rational& rhs) {
  return add_at_least(terms, rhs) && add_at_most(terms, rhs);
}

bool ExactLp::restore() {
  while (true) {
    std::size_t leave = kNone;
    for (std::size_t r = 0; r < tableau_.size(); ++r) {
      if (tableau_[r].value.sign() < 0 &&
          (leave == kNone || tableau_[r].basic < tableau_[leave].basic)) {
        leave = r;
      }
    }
    if (leave == kNone) return true;
    const Row& row = tableau_[leave];
    std::size_t enter = kNone;
    Rational best_ratio;
    for (std::size_t c = 0; c < row.coeff.size(); ++c) {
      if (row.coeff[c].sign() <= 0) continue;
      Rational ratio = reduced_[c] / row.coeff[c];
      if (enter == kNone || ratio < best_ratio ||
          (ratio == best_ratio && column_var_[c] < column_var_[enter])) {
        enter = c;
        best_ratio = std::move(ratio);
      }
    }
    if (enter == kNone) {
      feasible_ = false;
      return false;
    }
    if (++pivots_ > kPivotCap) throw std::logic_error("ExactLp: pivot cap exceeded");
    pivot(leave, enter);
  }
}

void ExactLp::pivot(std::size_t r, std::size_t c) {
  Row& prow = tableau_[r];
  const Rational p = prow.coeff[c];
  const std::size_t cols = prow.coeff.size();
  // Solve the pivot row for the entering variable.
  const std::size_t entering = column_var_[c];
  const std::size_t leaving = prow.basic;
  prow.value = -prow.value / p;
  for (std::size_t m = 0; m < cols; ++m) {
    if (m == c) {
      prow.coeff[m] = Rational(1) / p;
    } else if (!prow.coeff[m].is_zero()) {
      prow.coeff[m] = -prow.coeff[m] / p;
    }
  }
  prow.basic = entering;

  auto eliminate = [&](Rational& value, std::vector<Rational>& coeff) {
    const Rational f = coeff[c];
    if (f.is_zero()) return;
    value += f * prow.value;
    for (std::size_t m = 0; m < cols; ++m) {
      if (m == c) {
        coeff[m] = f * prow.coeff[m];
      } else if (!prow.coeff[m].is_zero()) {
        coeff[m] += f * prow.coeff[m];
      }
    }
  };
  for (std::size_t i = 0; i < tableau_.size(); ++i) {
    if (i != r) eliminate(tableau_[i].value, tableau_[i].coeff);
  }
  eliminate(objective_shift_, reduced_);

  column_var_[c] = leaving;
  if (entering < basic_row_of_.size()) basic_row_of_[entering] = r;
  if (leaving < basic_row_of_.size()) basic_row_of_[leaving] = kNone;
}

std::vector<Rational> ExactLp::solution() const {
  std::vector<Rational> x = lower_;
  for (const Row& row : tableau_) {
    if (row.basic < x.size()) x[row.basic] += row.value;
  }
  return x;
}

Rational ExactLp::objective() const {
  Rational z = objective_shift_;
  for (std::size_t j = 0; j < lower_.size(); ++j) z += cost_[j] * lower_[j];
  return z;
}

}  // namespace leafpow
