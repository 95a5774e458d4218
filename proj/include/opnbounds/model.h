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

#ifndef OPNBOUNDS_MODEL_H_
#define OPNBOUNDS_MODEL_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opnbounds/lin_expr.h"
#include "opnbounds/rational.h"

namespace opnbounds {

// Counting statistics of a hypothetical odd perfect number N = q^e m^2.
// Declaration order is significant: it fixes pivot tie-breaking in the LP
// and witness tie-breaking in the integer scan.
enum class VariableId {
  kE,      // exponent of the special prime
  kS,      // distinct primes p != 3 with p || m
  kT,      // distinct primes p != 3 with p^2 | m
  kS1,     // primes of S whose sigma(p^2) is prime
  kS2,     // ... whose sigma(p^2) has exactly two prime factors
  kS3,     // ... whose sigma(p^2) has at least three prime factors
  kS21,    // S2 primes that are 1 mod 3
  kS22,    // S2 primes that are 2 mod 3
  kS31,    // S3 primes that are 1 mod 3
  kS32,    // S3 primes that are 2 mod 3
  kF3,     // multiplicity of 3 in N
  kF4,     // multiplicity of primes (not 3, not special) with p^4 | N
  kOmega,  // big omega: prime factors with multiplicity
  kSmallOmega,  // distinct prime factors
};

inline constexpr int kNumVariables = 14;

inline constexpr std::array<VariableId, kNumVariables> kAllVariables = {
    VariableId::kE,   VariableId::kS,   VariableId::kT,     VariableId::kS1,
    VariableId::kS2,  VariableId::kS3,  VariableId::kS21,   VariableId::kS22,
    VariableId::kS31, VariableId::kS32, VariableId::kF3,    VariableId::kF4,
    VariableId::kOmega, VariableId::kSmallOmega};

constexpr int Index(VariableId v) { return static_cast<int>(v); }

// Machine name: e, s, t, s1, s2, s3, s21, s22, s31, s32, f3, f4, Omega, omega.
std::string_view VariableName(VariableId v);
// Display symbol; identical to the machine name except for Ω and ω.
std::string_view VariableSymbol(VariableId v);
std::optional<VariableId> VariableFromName(std::string_view name);

using LinExpr = BasicLinExpr<VariableId>;

enum class SystemCase { kThreeCoprime, kThreeDivides };

std::string_view CaseName(SystemCase c);
// Throws std::invalid_argument for anything but the two case names.
SystemCase CaseFromName(std::string_view name);

enum class Relation { kGreaterEqualZero, kEqualZero };

struct Constraint {
  std::string id;
  Relation relation = Relation::kGreaterEqualZero;
  LinExpr body;
  std::string label;  // equation number in the source derivation
  // Order in which the terms are rendered; matches the written inequality.
  std::vector<VariableId> layout;

  bool is_equality() const { return relation == Relation::kEqualZero; }
};

class ConstraintSystem {
 public:
  ConstraintSystem(SystemCase system_case, bool include_f3_min2,
                   std::vector<Constraint> constraints);

  SystemCase system_case() const { return case_; }
  bool include_f3_min2() const { return include_f3_min2_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const Constraint* Find(std::string_view id) const;

 private:
  SystemCase case_;
  bool include_f3_min2_;
  std::vector<Constraint> constraints_;
};

// The named constraint set for one case. `include_f3_min2` adds f3 - 2 >= 0
// and is ignored for kThreeCoprime. All variables are implicitly >= 0.
ConstraintSystem BuildSystem(SystemCase system_case,
                             bool include_f3_min2 = false);

// Renders e.g. "Ω − e − f3 − 2s − f4", terms in `layout` order first, then
// any remaining terms in declaration order, then the constant.
std::string RenderExpr(const LinExpr& expr,
                       const std::vector<VariableId>& layout = {});
std::string RenderConstraint(const Constraint& c);

// One line per constraint: "id | label | expression relation".
std::string DescribeSystem(const ConstraintSystem& system);

}  // namespace opnbounds

#endif  // OPNBOUNDS_MODEL_H_
