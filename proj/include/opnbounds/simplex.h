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

#ifndef OPNBOUNDS_SIMPLEX_H_
#define OPNBOUNDS_SIMPLEX_H_

#include <cstddef>
#include <utility>
#include <vector>

#include "opnbounds/rational.h"

namespace opnbounds {

// Dense LP over x >= 0:
//   minimize  objective . x + objective_constant
//   s.t.      coefs_i . x + constant_i  >= 0   (or == 0 when equality)
struct LinearProgram {
  struct Row {
    std::vector<Rational> coefs;
    Rational constant;
    bool equality = false;
  };

  std::size_t num_vars = 0;
  std::vector<Row> rows;
  std::vector<Rational> objective;
  Rational objective_constant;
};

enum class LpStatus { kOptimal, kUnbounded, kInfeasible };

const char* LpStatusName(LpStatus status);

struct SimplexResult {
  LpStatus status = LpStatus::kInfeasible;
  // The fields below are meaningful only when status == kOptimal.
  Rational value;
  std::vector<Rational> primal;
  // One multiplier per row: >= 0 on inequalities, signed on equalities,
  // with objective - sum(duals_i * row_i) having nonnegative coefficients
  // and constant term equal to `value`.
  std::vector<Rational> duals;
  // (entering column, leaving row) for every pivot performed, both phases.
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
};

// Exact two-phase tableau simplex with Bland's rule. Columns are ordered
// structural variables, then one slack per inequality row, then one
// artificial per row; ties always go to the lowest index, so the pivot
// sequence is a pure function of the input.
SimplexResult SolveSimplex(const LinearProgram& lp);

}  // namespace opnbounds

#endif  // OPNBOUNDS_SIMPLEX_H_
