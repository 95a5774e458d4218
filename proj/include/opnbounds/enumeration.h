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

#ifndef OPNBOUNDS_ENUMERATION_H_
#define OPNBOUNDS_ENUMERATION_H_

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "opnbounds/model.h"
#include "opnbounds/rational.h"

namespace opnbounds {

struct IntegerPoint {
  std::array<std::int64_t, kNumVariables> values{};

  std::int64_t& operator[](VariableId v) { return values[Index(v)]; }
  std::int64_t operator[](VariableId v) const { return values[Index(v)]; }

  friend auto operator<=>(const IntegerPoint&, const IntegerPoint&) = default;
};

// Exact pointwise check of every constraint plus nonnegativity, evaluated in
// scaled integer arithmetic (independent of LinExpr::Evaluate).
bool IsFeasible(const ConstraintSystem& system, const IntegerPoint& point);

// IsFeasible with the constraint rows compiled once, for repeated queries.
class FeasibilityChecker {
 public:
  explicit FeasibilityChecker(const ConstraintSystem& system);
  ~FeasibilityChecker();
  FeasibilityChecker(FeasibilityChecker&&) noexcept;
  FeasibilityChecker& operator=(FeasibilityChecker&&) noexcept;

  bool operator()(const IntegerPoint& point) const;

 private:
  struct Rows;
  std::unique_ptr<Rows> rows_;
};

struct ScanResult {
  std::optional<Rational> minimum;  // absent: no feasible point in the box
  IntegerPoint witness;
  std::uint64_t points_scanned = 0;
  std::uint64_t feasible_points = 0;
};

// Minimizes Omega - slope*omega over integer points whose free counts
// e, s1, s21, s22, s31, s32, t, f3, f4 lie in [0, box_max]. s2, s3, s and
// omega follow from the equalities and Omega is set to e + f3 + 2s + f4,
// its least feasible value; the objective increases with Omega, so the
// minimum is unchanged. Ties go to the lexicographically smallest point in
// declaration order. Parallel over e; the result does not depend on `jobs`.
ScanResult IntegerScan(const ConstraintSystem& system, const Rational& slope,
                       std::int64_t box_max, unsigned jobs = 1);

// Visits every point IntegerScan considers, feasible or not.
void ForEachScanPoint(const ConstraintSystem& system, std::int64_t box_max,
                      const std::function<void(const IntegerPoint&)>& visit);

// {"system": ..., "slope": "8/3", "box_max": 4, "minimum": "-7/3",
//  "witness": {"e": "1", ...}}; minimum and witness are null when empty.
std::string ScanResultToJson(const ConstraintSystem& system,
                             const Rational& slope, std::int64_t box_max,
                             const ScanResult& result);

}  // namespace opnbounds

#endif  // OPNBOUNDS_ENUMERATION_H_
