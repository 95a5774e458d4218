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

#include "opnbounds/enumeration.h"

#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "opnbounds/parallel.h"

namespace opnbounds {
namespace {

using i128 = __int128;
using V = VariableId;

// Constraint scaled by the lcm of its denominators to integer coefficients.
struct IntegerRow {
  std::array<std::int64_t, kNumVariables> coefs{};
  std::int64_t constant = 0;
  bool equality = false;
};

std::int64_t ToInt64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("coefficient too large");
  return z.get_si();
}

std::vector<IntegerRow> CompileRows(const ConstraintSystem& system) {
  std::vector<IntegerRow> rows;
  for (const Constraint& c : system.constraints()) {
    mpz_class scale = c.body.constant().denominator();
    for (const auto& [v, coef] : c.body.terms()) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
              coef.denominator().get_mpz_t());
    }
    const Rational factor(scale, mpz_class(1));
    IntegerRow row;
    row.equality = c.is_equality();
    for (const auto& [v, coef] : c.body.terms()) {
      row.coefs[Index(v)] = ToInt64((coef * factor).numerator());
    }
    row.constant = ToInt64((c.body.constant() * factor).numerator());
    rows.push_back(row);
  }
  return rows;
}

bool Satisfies(const std::vector<IntegerRow>& rows, const IntegerPoint& p) {
  for (std::int64_t x : p.values) {
    if (x < 0) return false;
  }
  for (const IntegerRow& row : rows) {
    i128 sum = row.constant;
    for (int k = 0; k < kNumVariables; ++k) {
      sum += static_cast<i128>(row.coefs[k]) * p.values[k];
    }
    if (row.equality ? sum != 0 : sum < 0) return false;
  }
  return true;
}

std::int64_t OmegaOffset(const ConstraintSystem& system) {
  return system.system_case() == SystemCase::kThreeCoprime ? 1 : 2;
}

// Iterates the eight inner free counts for a fixed e.
template <typename Fn>
void ScanSlice(std::int64_t e, std::int64_t box, std::int64_t omega_offset,
               Fn&& fn) {
  IntegerPoint p;
  p[V::kE] = e;
  for (std::int64_t s1 = 0; s1 <= box; ++s1)
    for (std::int64_t s21 = 0; s21 <= box; ++s21)
      for (std::int64_t s22 = 0; s22 <= box; ++s22)
        for (std::int64_t s31 = 0; s31 <= box; ++s31)
          for (std::int64_t s32 = 0; s32 <= box; ++s32)
            for (std::int64_t t = 0; t <= box; ++t)
              for (std::int64_t f3 = 0; f3 <= box; ++f3)
                for (std::int64_t f4 = 0; f4 <= box; ++f4) {
                  p[V::kS1] = s1;
                  p[V::kS21] = s21;
                  p[V::kS22] = s22;
                  p[V::kS31] = s31;
                  p[V::kS32] = s32;
                  p[V::kT] = t;
                  p[V::kF3] = f3;
                  p[V::kF4] = f4;
                  p[V::kS2] = s21 + s22;
                  p[V::kS3] = s31 + s32;
                  p[V::kS] = s1 + p[V::kS2] + p[V::kS3];
                  p[V::kSmallOmega] = p[V::kS] + t + omega_offset;
                  p[V::kOmega] = e + f3 + 2 * p[V::kS] + f4;
                  fn(p);
                }
}

}  // namespace

struct FeasibilityChecker::Rows {
  std::vector<IntegerRow> rows;
};

FeasibilityChecker::FeasibilityChecker(const ConstraintSystem& system)
    : rows_(std::make_unique<Rows>(Rows{CompileRows(system)})) {}
FeasibilityChecker::~FeasibilityChecker() = default;
FeasibilityChecker::FeasibilityChecker(FeasibilityChecker&&) noexcept = default;
FeasibilityChecker& FeasibilityChecker::operator=(
    FeasibilityChecker&&) noexcept = default;

bool FeasibilityChecker::operator()(const IntegerPoint& point) const {
  return Satisfies(rows_->rows, point);
}

bool IsFeasible(const ConstraintSystem& system, const IntegerPoint& point) {
  return FeasibilityChecker(system)(point);
}

void ForEachScanPoint(const ConstraintSystem& system, std::int64_t box_max,
                      const std::function<void(const IntegerPoint&)>& visit) {
  const std::int64_t offset = OmegaOffset(system);
  for (std::int64_t e = 0; e <= box_max; ++e) {
    ScanSlice(e, box_max, offset, visit);
  }
}

ScanResult IntegerScan(const ConstraintSystem& system, const Rational& slope,
                       std::int64_t box_max, unsigned jobs) {
  if (box_max < 1) throw std::invalid_argument("box_max must be >= 1");
  const std::vector<IntegerRow> rows = CompileRows(system);
  const std::int64_t offset = OmegaOffset(system);
  // Compare den*(Omega - slope*omega) = den*Omega - num*omega in integers.
  const std::int64_t num = ToInt64(slope.numerator());
  const std::int64_t den = ToInt64(slope.denominator());

  struct Slice {
    bool found = false;
    i128 best = 0;
    IntegerPoint witness;
    std::uint64_t scanned = 0;
    std::uint64_t feasible = 0;
  };
  std::vector<Slice> slices(box_max + 1);
  ParallelChunks(slices.size(), jobs, [&](std::size_t e) {
    Slice& slice = slices[e];
    ScanSlice(static_cast<std::int64_t>(e), box_max, offset,
              [&](const IntegerPoint& p) {
                ++slice.scanned;
                if (!Satisfies(rows, p)) return;
                ++slice.feasible;
                const i128 value = static_cast<i128>(den) * p[V::kOmega] -
                                   static_cast<i128>(num) * p[V::kSmallOmega];
                if (!slice.found || value < slice.best ||
                    (value == slice.best && p < slice.witness)) {
                  slice.found = true;
                  slice.best = value;
                  slice.witness = p;
                }
              });
  });

  ScanResult result;
  const Slice* best = nullptr;
  for (const Slice& slice : slices) {
    result.points_scanned += slice.scanned;
    result.feasible_points += slice.feasible;
    if (!slice.found) continue;
    if (best == nullptr || slice.best < best->best ||
        (slice.best == best->best && slice.witness < best->witness)) {
      best = &slice;
    }
  }
  if (best != nullptr) {
    const Rational omega_part(best->witness[V::kSmallOmega]);
    result.minimum = Rational(best->witness[V::kOmega]) - slope * omega_part;
    result.witness = best->witness;
  }
  return result;
}

std::string ScanResultToJson(const ConstraintSystem& system,
                             const Rational& slope, std::int64_t box_max,
                             const ScanResult& result) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["system"] = std::string(CaseName(system.system_case()));
  doc["include_f3_min2"] = system.include_f3_min2();
  doc["slope"] = slope.ToString();
  doc["box_max"] = box_max;
  doc["points_scanned"] = result.points_scanned;
  doc["feasible_points"] = result.feasible_points;
  if (result.minimum) {
    doc["minimum"] = result.minimum->ToString();
    json witness = json::object();
    for (VariableId v : kAllVariables) {
      witness[std::string(VariableName(v))] =
          Rational(result.witness[v]).ToString();
    }
    doc["witness"] = witness;
  } else {
    doc["minimum"] = nullptr;
    doc["witness"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

}  // namespace opnbounds
