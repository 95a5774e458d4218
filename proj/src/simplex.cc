// Copyright 2026 The opnbounds Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "opnbounds/simplex.h"

#include <optional>
#include <stdexcept>

namespace opnbounds {
namespace {

class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : lp_(lp) {
    const std::size_t m = lp.rows.size();
    num_struct_ = lp.num_vars;
    std::size_t num_slack = 0;
    for (const auto& row : lp.rows) {
      if (row.coefs.size() != lp.num_vars) {
        throw std::invalid_argument("row width does not match num_vars");
      }
      if (!row.equality) ++num_slack;
    }
    if (lp.objective.size() != lp.num_vars) {
      throw std::invalid_argument("objective width does not match num_vars");
    }
    first_artificial_ = num_struct_ + num_slack;
    num_cols_ = first_artificial_ + m;

    cells_.assign(m, std::vector<Rational>(num_cols_));
    rhs_.resize(m);
    row_sign_.resize(m);
    basis_.resize(m);
    std::size_t slack = num_struct_;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& row = lp.rows[i];
      for (std::size_t j = 0; j < num_struct_; ++j) cells_[i][j] = row.coefs[j];
      if (!row.equality) cells_[i][slack++] = Rational(-1);
      rhs_[i] = -row.constant;
      row_sign_[i] = 1;
      if (rhs_[i].sign() < 0) {
        row_sign_[i] = -1;
        rhs_[i] = -rhs_[i];
        for (Rational& cell : cells_[i]) cell = -cell;
      }
      cells_[i][first_artificial_ + i] = Rational(1);
      basis_[i] = first_artificial_ + i;
    }
  }

  bool is_artificial(std::size_t col) const { return col >= first_artificial_; }

  // Runs Bland's rule on `cost` until optimal or unbounded. Artificial
  // columns may enter only when `allow_artificial` is set.
  bool Optimize(const std::vector<Rational>& cost, bool allow_artificial,
                std::vector<std::pair<std::size_t, std::size_t>>& pivots) {
    const std::size_t m = cells_.size();
    while (true) {
      std::optional<std::size_t> entering;
      const std::size_t limit = allow_artificial ? num_cols_ : first_artificial_;
      for (std::size_t j = 0; j < limit && !entering; ++j) {
        if (ReducedCost(cost, j).sign() < 0) entering = j;
      }
      if (!entering) return true;

      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < m; ++i) {
        const Rational& a = cells_[i][*entering];
        if (a.sign() <= 0) continue;
        Rational ratio = rhs_[i] / a;
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      Pivot(*leaving, *entering);
      pivots.emplace_back(*entering, *leaving);
    }
  }

  // Pivots basic artificials out wherever a nonzero structural or slack
  // entry exists in their row. Rows with none are redundant and keep their
  // artificial at level zero.
  void DriveOutArtificials(
      std::vector<std::pair<std::size_t, std::size_t>>& pivots) {
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (!cells_[i][j].is_zero()) {
          Pivot(i, j);
          pivots.emplace_back(j, i);
          break;
        }
      }
    }
  }

  Rational Objective(const std::vector<Rational>& cost) const {
    Rational total;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      total += cost[basis_[i]] * rhs_[i];
    }
    return total;
  }

  std::vector<Rational> Primal() const {
    std::vector<Rational> x(num_struct_);
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (basis_[i] < num_struct_) x[basis_[i]] = rhs_[i];
    }
    return x;
  }

  // y = c_B B^{-1}; the artificial block of the tableau holds B^{-1}.
  std::vector<Rational> Duals(const std::vector<Rational>& cost) const {
    const std::size_t m = cells_.size();
    std::vector<Rational> y(m);
    for (std::size_t k = 0; k < m; ++k) {
      Rational yk;
      for (std::size_t r = 0; r < m; ++r) {
        yk += cost[basis_[r]] * cells_[r][first_artificial_ + k];
      }
      y[k] = row_sign_[k] < 0 ? -yk : yk;
      if (!lp_.rows[k].equality && y[k].sign() < 0) {
        throw std::logic_error("negative dual on an inequality row");
      }
    }
    return y;
  }

  std::vector<Rational> PhaseOneCost() const {
    std::vector<Rational> cost(num_cols_);
    for (std::size_t j = first_artificial_; j < num_cols_; ++j) {
      cost[j] = Rational(1);
    }
    return cost;
  }

  std::vector<Rational> PhaseTwoCost() const {
    std::vector<Rational> cost(num_cols_);
    for (std::size_t j = 0; j < num_struct_; ++j) cost[j] = lp_.objective[j];
    return cost;
  }

 private:
  Rational ReducedCost(const std::vector<Rational>& cost, std::size_t j) const {
    Rational d = cost[j];
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (basis_[i] == j) return Rational(0);
      if (!cells_[i][j].is_zero()) d -= cost[basis_[i]] * cells_[i][j];
    }
    return d;
  }

  void Pivot(std::size_t row, std::size_t col) {
    const Rational pivot = cells_[row][col];
    for (Rational& cell : cells_[row]) cell /= pivot;
    rhs_[row] /= pivot;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (i == row) continue;
      const Rational factor = cells_[i][col];
      if (factor.is_zero()) continue;
      for (std::size_t j = 0; j < num_cols_; ++j) {
        if (!cells_[row][j].is_zero()) cells_[i][j] -= factor * cells_[row][j];
      }
      rhs_[i] -= factor * rhs_[row];
    }
    basis_[row] = col;
  }

  const LinearProgram& lp_;
  std::size_t num_struct_ = 0;
  std::size_t first_artificial_ = 0;
  std::size_t num_cols_ = 0;
  std::vector<std::vector<Rational>> cells_;
  std::vector<Rational> rhs_;
  std::vector<int> row_sign_;
  std::vector<std::size_t> basis_;
};

}  // namespace

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kInfeasible:
      return "infeasible";
  }
  return "?";
}

SimplexResult SolveSimplex(const LinearProgram& lp) {
  SimplexResult result;
  Tableau tableau(lp);

  const auto phase_one = tableau.PhaseOneCost();
  // Phase one is bounded below by zero, so it always terminates optimal.
  tableau.Optimize(phase_one, /*allow_artificial=*/true, result.pivots);
  if (tableau.Objective(phase_one).sign() > 0) {
    result.status = LpStatus::kInfeasible;
    return result;
  }
  tableau.DriveOutArtificials(result.pivots);

  const auto phase_two = tableau.PhaseTwoCost();
  if (!tableau.Optimize(phase_two, /*allow_artificial=*/false,
                        result.pivots)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }
  result.status = LpStatus::kOptimal;
  result.value = tableau.Objective(phase_two) + lp.objective_constant;
  result.primal = tableau.Primal();
  result.duals = tableau.Duals(phase_two);
  return result;
}

}  // namespace opnbounds
