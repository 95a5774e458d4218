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

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <sstream>
#include <string>

#include "golden_system.h"

namespace opnbounds {
namespace {

void ExpectMatchesGolden(const ConstraintSystem& system,
                         const std::vector<GoldenRow>& golden) {
  ASSERT_EQ(system.constraints().size(), golden.size());
  for (std::size_t i = 0; i < golden.size(); ++i) {
    const Constraint& c = system.constraints()[i];
    const GoldenRow& g = golden[i];
    SCOPED_TRACE(g.id);
    EXPECT_EQ(c.id, g.id);
    EXPECT_EQ(c.is_equality(), g.equality);
    EXPECT_EQ(c.body.constant(), Rational(g.constant));
    ASSERT_EQ(c.body.terms().size(), g.coefs.size());
    for (const auto& [name, coef] : g.coefs) {
      const auto v = VariableFromName(name);
      ASSERT_TRUE(v.has_value()) << name;
      EXPECT_EQ(c.body.coefficient(*v), Rational(coef)) << name;
    }
  }
}

TEST(ModelTest, VariableNamesRoundTrip) {
  std::set<std::string_view> names;
  for (VariableId v : kAllVariables) {
    names.insert(VariableName(v));
    EXPECT_EQ(VariableFromName(VariableName(v)), v);
  }
  EXPECT_EQ(names.size(), static_cast<std::size_t>(kNumVariables));
  EXPECT_FALSE(VariableFromName("q").has_value());
}

TEST(ModelTest, ThreeCoprimeMatchesGolden) {
  const ConstraintSystem sys = BuildSystem(SystemCase::kThreeCoprime);
  EXPECT_EQ(sys.constraints().size(), 14u);
  ExpectMatchesGolden(sys, Golden(SystemCase::kThreeCoprime, false));
  // The flag is meaningless here.
  ExpectMatchesGolden(BuildSystem(SystemCase::kThreeCoprime, true),
                      Golden(SystemCase::kThreeCoprime, false));
}

TEST(ModelTest, ThreeDividesMatchesGolden) {
  ExpectMatchesGolden(BuildSystem(SystemCase::kThreeDivides, true),
                      Golden(SystemCase::kThreeDivides, true));
  ExpectMatchesGolden(BuildSystem(SystemCase::kThreeDivides, false),
                      Golden(SystemCase::kThreeDivides, false));
}

TEST(ModelTest, F3Min2Flag) {
  const ConstraintSystem with = BuildSystem(SystemCase::kThreeDivides, true);
  const ConstraintSystem without = BuildSystem(SystemCase::kThreeDivides, false);
  ASSERT_NE(with.Find("f3_min2"), nullptr);
  EXPECT_EQ(RenderConstraint(*with.Find("f3_min2")), "f3 − 2 ≥ 0");
  EXPECT_EQ(without.Find("f3_min2"), nullptr);
  EXPECT_EQ(with.constraints().size(), without.constraints().size() + 1);
  EXPECT_TRUE(with.include_f3_min2());
  EXPECT_FALSE(without.include_f3_min2());
}

TEST(ModelTest, OmegaNo3) {
  const ConstraintSystem sys = BuildSystem(SystemCase::kThreeCoprime);
  const Constraint* c = sys.Find("omega_no3");
  ASSERT_NE(c, nullptr);
  EXPECT_TRUE(c->is_equality());
  EXPECT_EQ(RenderConstraint(*c), "s + t − ω + 1 = 0");
}

TEST(ModelTest, EachInequalityAppearsOnceAcrossCases) {
  std::map<std::string, int> label_count;
  const ConstraintSystem a = BuildSystem(SystemCase::kThreeCoprime);
  const ConstraintSystem b = BuildSystem(SystemCase::kThreeDivides, true);
  for (const auto* sys : {&a, &b}) {
    std::set<std::string> ids;
    for (const Constraint& c : sys->constraints()) {
      EXPECT_TRUE(ids.insert(c.id).second) << "duplicate id " << c.id;
    }
  }
  for (const Constraint& c : a.constraints()) ++label_count[c.label];
  for (const Constraint& c : b.constraints()) ++label_count[c.label];
  for (int eq = 5; eq <= 16; ++eq) {
    const std::string label = "Eq. " + std::to_string(eq);
    // 5..14 are shared by both cases; 15 and 16 are case-specific.
    EXPECT_EQ(label_count[label], eq <= 14 ? 2 : 1) << label;
  }
}

TEST(ModelTest, EulerWitnessSatisfiesThreeCoprime) {
  const ConstraintSystem sys = BuildSystem(SystemCase::kThreeCoprime);
  auto value = [](VariableId v) {
    switch (v) {
      case VariableId::kE:
      case VariableId::kOmega:
      case VariableId::kSmallOmega:
        return Rational(1);
      default:
        return Rational(0);
    }
  };
  for (const Constraint& c : sys.constraints()) {
    const Rational r = c.body.Evaluate(value);
    if (c.is_equality()) {
      EXPECT_EQ(r, Rational(0)) << c.id;
    } else {
      EXPECT_GE(r, Rational(0)) << c.id;
    }
  }
}

TEST(ModelTest, BodiesUseOnlyDeclaredVariables) {
  for (const auto& sys : {BuildSystem(SystemCase::kThreeCoprime),
                          BuildSystem(SystemCase::kThreeDivides, true)}) {
    for (const Constraint& c : sys.constraints()) {
      for (const auto& [v, coef] : c.body.terms()) {
        EXPECT_GE(Index(v), 0);
        EXPECT_LT(Index(v), kNumVariables);
      }
    }
  }
}

TEST(ModelTest, DescribeRows) {
  const std::string coprime = DescribeSystem(BuildSystem(SystemCase::kThreeCoprime));
  EXPECT_NE(coprime.find("omega_lower | Eq. 9 | Ω − e − f3 − 2s − f4 ≥ 0\n"),
            std::string::npos)
      << coprime;
  const std::string divides =
      DescribeSystem(BuildSystem(SystemCase::kThreeDivides, true));
  EXPECT_NE(divides.find("f3_lower | Eq. 12 | f3 − s21 − s31 ≥ 0\n"),
            std::string::npos)
      << divides;

  for (const auto& sys : {BuildSystem(SystemCase::kThreeCoprime),
                          BuildSystem(SystemCase::kThreeDivides, false)}) {
    std::istringstream lines(DescribeSystem(sys));
    std::string line;
    std::size_t n = 0;
    while (std::getline(lines, line)) ++n;
    EXPECT_EQ(n, sys.constraints().size());
  }
}

TEST(ModelTest, RenderExprFormatting) {
  LinExpr e = LinExpr::Term(VariableId::kSmallOmega, Rational(-8, 3));
  e += LinExpr::Term(VariableId::kOmega);
  e += LinExpr(Rational(7, 3));
  EXPECT_EQ(RenderExpr(e), "Ω − 8/3·ω + 7/3");
  EXPECT_EQ(RenderExpr(LinExpr()), "0");
  EXPECT_EQ(RenderExpr(LinExpr(Rational(-2))), "−2");
}

TEST(ModelTest, CaseNames) {
  EXPECT_EQ(CaseFromName("three_coprime"), SystemCase::kThreeCoprime);
  EXPECT_EQ(CaseFromName("three_divides"), SystemCase::kThreeDivides);
  EXPECT_THROW(CaseFromName("three"), std::invalid_argument);
}

}  // namespace
}  // namespace opnbounds
