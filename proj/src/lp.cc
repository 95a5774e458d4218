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

#include "opnbounds/lp.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace opnbounds {
namespace {

std::vector<Rational> Dense(const LinExpr& expr) {
  std::vector<Rational> out(kNumVariables);
  for (const auto& [v, coef] : expr.terms()) out[Index(v)] = coef;
  return out;
}

bool IsSlopeObjective(const LinExpr& objective) {
  for (const auto& [v, coef] : objective.terms()) {
    if (v == VariableId::kOmega && coef != Rational(1)) return false;
    if (v != VariableId::kOmega && v != VariableId::kSmallOmega) return false;
  }
  return objective.coefficient(VariableId::kOmega) == Rational(1);
}

}  // namespace

LPSolution Minimize(const ConstraintSystem& system, const LinExpr& objective) {
  LinearProgram lp;
  lp.num_vars = kNumVariables;
  for (const Constraint& c : system.constraints()) {
    lp.rows.push_back({Dense(c.body), c.body.constant(), c.is_equality()});
  }
  lp.objective = Dense(objective);
  lp.objective_constant = objective.constant();

  const SimplexResult raw = SolveSimplex(lp);
  LPSolution solution;
  solution.status = raw.status;
  solution.pivot_count = raw.pivots.size();
  if (raw.status != LpStatus::kOptimal) return solution;

  solution.value = raw.value;
  for (VariableId v : kAllVariables) solution.primal[v] = raw.primal[Index(v)];
  const auto& constraints = system.constraints();
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    if (!raw.duals[i].is_zero()) {
      solution.multipliers[constraints[i].id] = raw.duals[i];
    }
  }
  if (IsSlopeObjective(objective)) {
    Certificate cert;
    cert.system_case = system.system_case();
    cert.include_f3_min2 = system.include_f3_min2();
    cert.multipliers = solution.multipliers;
    cert.claimed_slope = -objective.coefficient(VariableId::kSmallOmega);
    cert.claimed_constant = raw.value - objective.constant();
    solution.dual = std::move(cert);
  }
  return solution;
}

BoundResult BestConstant(const ConstraintSystem& system,
                         const Rational& slope) {
  const LinExpr objective =
      LinExpr::Term(VariableId::kOmega) -
      LinExpr::Term(VariableId::kSmallOmega, slope);
  LPSolution solution = Minimize(system, objective);
  if (solution.status == LpStatus::kUnbounded) throw UnsupportedSlopeError();
  if (solution.status == LpStatus::kInfeasible) {
    throw std::runtime_error("system is infeasible");
  }
  const VerificationReport report = VerifyCertificate(system, *solution.dual);
  if (!report.pass || report.derived_constant != *solution.value) {
    throw std::logic_error("dual certificate failed to verify: " +
                           report.failure_reason.value_or("constant mismatch"));
  }
  return BoundResult{*solution.value, std::move(*solution.dual),
                     std::move(solution.primal)};
}

std::vector<FrontierRow> Frontier(const ConstraintSystem& system,
                                  const std::vector<Rational>& slopes,
                                  unsigned jobs) {
  std::vector<FrontierRow> rows(slopes.size());
  std::vector<std::exception_ptr> errors(slopes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < slopes.size(); i = next++) {
      rows[i].slope = slopes[i];
      try {
        rows[i].bound = BestConstant(system, slopes[i]);
        rows[i].status = LpStatus::kOptimal;
      } catch (const UnsupportedSlopeError&) {
        rows[i].status = LpStatus::kUnbounded;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, slopes.size()));
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < n; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return rows;
}

}  // namespace opnbounds
