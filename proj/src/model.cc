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

#include "opnbounds/model.h"

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace opnbounds {
namespace {

constexpr std::array<std::string_view, kNumVariables> kNames = {
    "e",   "s",   "t",   "s1", "s2", "s3",    "s21",
    "s22", "s31", "s32", "f3", "f4", "Omega", "omega"};

using V = VariableId;

struct TermSpec {
  std::int64_t coef;
  VariableId var;
};

Constraint Make(std::string id, std::string label, Relation relation,
                std::initializer_list<TermSpec> terms,
                std::int64_t constant = 0) {
  Constraint c;
  c.id = std::move(id);
  c.label = std::move(label);
  c.relation = relation;
  c.body = LinExpr(Rational(constant));
  for (const TermSpec& t : terms) {
    c.body.AddTerm(t.var, Rational(t.coef));
    c.layout.push_back(t.var);
  }
  return c;
}

constexpr Relation kGe = Relation::kGreaterEqualZero;
constexpr Relation kEq = Relation::kEqualZero;

}  // namespace

std::string_view VariableName(VariableId v) { return kNames[Index(v)]; }

std::string_view VariableSymbol(VariableId v) {
  switch (v) {
    case V::kOmega:
      return "Ω";
    case V::kSmallOmega:
      return "ω";
    default:
      return VariableName(v);
  }
}

std::optional<VariableId> VariableFromName(std::string_view name) {
  for (VariableId v : kAllVariables) {
    if (VariableName(v) == name) return v;
  }
  return std::nullopt;
}

std::string_view CaseName(SystemCase c) {
  return c == SystemCase::kThreeCoprime ? "three_coprime" : "three_divides";
}

SystemCase CaseFromName(std::string_view name) {
  if (name == "three_coprime") return SystemCase::kThreeCoprime;
  if (name == "three_divides") return SystemCase::kThreeDivides;
  throw std::invalid_argument("unknown system \"" + std::string(name) +
                              "\" (expected three_coprime or three_divides)");
}

ConstraintSystem::ConstraintSystem(SystemCase system_case, bool include_f3_min2,
                                   std::vector<Constraint> constraints)
    : case_(system_case),
      include_f3_min2_(include_f3_min2),
      constraints_(std::move(constraints)) {
  for (size_t i = 0; i < constraints_.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (constraints_[i].id == constraints_[j].id) {
        throw std::invalid_argument("duplicate constraint id " +
                                    constraints_[i].id);
      }
    }
  }
}

const Constraint* ConstraintSystem::Find(std::string_view id) const {
  for (const Constraint& c : constraints_) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

ConstraintSystem BuildSystem(SystemCase system_case, bool include_f3_min2) {
  std::vector<Constraint> cs;
  cs.push_back(Make("special_exists", "Eq. 5", kGe, {{1, V::kE}}, -1));
  cs.push_back(Make("s_breakdown", "Eq. 6", kEq,
                    {{1, V::kS1}, {1, V::kS2}, {1, V::kS3}, {-1, V::kS}}));
  cs.push_back(Make("s2_breakdown", "Eq. 7", kEq,
                    {{1, V::kS21}, {1, V::kS22}, {-1, V::kS2}}));
  cs.push_back(Make("s3_breakdown", "Eq. 8", kEq,
                    {{1, V::kS31}, {1, V::kS32}, {-1, V::kS3}}));
  cs.push_back(Make("omega_lower", "Eq. 9", kGe,
                    {{1, V::kOmega},
                     {-1, V::kE},
                     {-1, V::kF3},
                     {-2, V::kS},
                     {-1, V::kF4}}));
  cs.push_back(Make("s1_s22_upper", "Eq. 10", kGe,
                    {{1, V::kT},
                     {1, V::kS21},
                     {1, V::kS31},
                     {-1, V::kS1},
                     {-1, V::kS22}},
                    1));
  cs.push_back(Make("s1_upper", "Eq. 11", kGe,
                    {{1, V::kT}, {1, V::kS31}, {-1, V::kS1}}, 1));
  cs.push_back(Make("f3_lower", "Eq. 12", kGe,
                    {{1, V::kF3}, {-1, V::kS21}, {-1, V::kS31}}));
  cs.push_back(Make("mod3_count", "Eq. 13", kGe,
                    {{1, V::kF4},
                     {1, V::kE},
                     {1, V::kS21},
                     {-1, V::kS1},
                     {-2, V::kS22},
                     {-3, V::kS32}}));
  cs.push_back(Make("t_f4", "Eq. 14", kGe, {{1, V::kF4}, {-4, V::kT}}));
  if (system_case == SystemCase::kThreeCoprime) {
    cs.push_back(Make("omega_no3", "Eq. 15", kEq,
                      {{1, V::kS}, {1, V::kT}, {-1, V::kSmallOmega}}, 1));
    cs.push_back(Make("f3_zero", "3∤N", kEq, {{1, V::kF3}}));
    cs.push_back(Make("s21_zero", "3∤N", kEq, {{1, V::kS21}}));
    cs.push_back(Make("s31_zero", "3∤N", kEq, {{1, V::kS31}}));
    include_f3_min2 = false;
  } else {
    cs.push_back(Make("omega_with3", "Eq. 16", kEq,
                      {{1, V::kS}, {1, V::kT}, {-1, V::kSmallOmega}}, 2));
    if (include_f3_min2) {
      cs.push_back(Make("f3_min2", "3|N", kGe, {{1, V::kF3}}, -2));
    }
  }
  return ConstraintSystem(system_case, include_f3_min2, std::move(cs));
}

std::string RenderExpr(const LinExpr& expr,
                       const std::vector<VariableId>& layout) {
  std::vector<VariableId> order;
  for (VariableId v : layout) {
    if (std::find(order.begin(), order.end(), v) == order.end()) {
      order.push_back(v);
    }
  }
  for (const auto& [v, coef] : expr.terms()) {
    if (std::find(order.begin(), order.end(), v) == order.end()) {
      order.push_back(v);
    }
  }

  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& value, std::string_view symbol) {
    const bool negative = value.sign() < 0;
    const Rational magnitude = negative ? -value : value;
    if (first) {
      if (negative) os << "−";
    } else {
      os << (negative ? " − " : " + ");
    }
    if (symbol.empty()) {
      os << magnitude;
    } else {
      if (magnitude != Rational(1)) {
        os << magnitude;
        if (!magnitude.is_integer()) os << "·";
      }
      os << symbol;
    }
    first = false;
  };
  for (VariableId v : order) {
    const Rational coef = expr.coefficient(v);
    if (!coef.is_zero()) emit(coef, VariableSymbol(v));
  }
  if (!expr.constant().is_zero() || first) emit(expr.constant(), "");
  return os.str();
}

std::string RenderConstraint(const Constraint& c) {
  return RenderExpr(c.body, c.layout) + (c.is_equality() ? " = 0" : " ≥ 0");
}

std::string DescribeSystem(const ConstraintSystem& system) {
  std::ostringstream os;
  for (const Constraint& c : system.constraints()) {
    os << c.id << " | " << c.label << " | " << RenderConstraint(c) << "\n";
  }
  return os.str();
}

}  // namespace opnbounds
