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

#ifndef OPNBOUNDS_LP_H_
#define OPNBOUNDS_LP_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "opnbounds/certificate.h"
#include "opnbounds/model.h"
#include "opnbounds/simplex.h"

namespace opnbounds {

using Assignment = std::map<VariableId, Rational>;

struct LPSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::optional<Rational> value;
  Assignment primal;
  // Dual multiplier per constraint id (optimal only).
  std::map<std::string, Rational> multipliers;
  // Present when optimal and the objective has the form Omega - a*omega + k;
  // it then proves Omega >= a*omega + (value - k).
  std::optional<Certificate> dual;
  std::size_t pivot_count = 0;
};

// Minimizes `objective` over `system` with every variable >= 0.
LPSolution Minimize(const ConstraintSystem& system, const LinExpr& objective);

class UnsupportedSlopeError : public std::runtime_error {
 public:
  UnsupportedSlopeError() : std::runtime_error("slope not supported by system") {}
};

struct BoundResult {
  Rational constant;
  Certificate certificate;
  Assignment witness;
};

// Largest b with Omega >= slope*omega + b on the system's LP relaxation.
// The returned certificate has already been verified. Throws
// UnsupportedSlopeError when the minimum is unbounded below.
BoundResult BestConstant(const ConstraintSystem& system, const Rational& slope);

struct FrontierRow {
  Rational slope;
  LpStatus status = LpStatus::kInfeasible;
  std::optional<BoundResult> bound;
};

// BestConstant for each slope, in input order. Rows are solved on up to
// `jobs` threads; the result does not depend on `jobs`.
std::vector<FrontierRow> Frontier(const ConstraintSystem& system,
                                  const std::vector<Rational>& slopes,
                                  unsigned jobs = 1);

}  // namespace opnbounds

#endif  // OPNBOUNDS_LP_H_
