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

#ifndef OPNBOUNDS_LIN_EXPR_H_
#define OPNBOUNDS_LIN_EXPR_H_

#include <map>
#include <utility>
#include <vector>

#include "opnbounds/rational.h"

namespace opnbounds {

// Sparse affine expression sum(coef * var) + constant over an ordered key
// type. Zero coefficients are never stored, so two expressions are equal iff
// they denote the same affine function.
template <typename Var>
class BasicLinExpr {
 public:
  using Terms = std::map<Var, Rational>;

  BasicLinExpr() = default;
  BasicLinExpr(Rational constant)  // NOLINT(google-explicit-constructor)
      : constant_(std::move(constant)) {}

  static BasicLinExpr Term(Var var, Rational coef = Rational(1)) {
    BasicLinExpr e;
    e.AddTerm(var, coef);
    return e;
  }

  const Terms& terms() const { return terms_; }
  const Rational& constant() const { return constant_; }

  Rational coefficient(Var var) const {
    auto it = terms_.find(var);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_constant() const { return terms_.empty(); }

  BasicLinExpr& AddTerm(Var var, const Rational& coef) {
    if (coef.is_zero()) return *this;
    auto [it, inserted] = terms_.try_emplace(var, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  BasicLinExpr& operator+=(const BasicLinExpr& other) {
    for (const auto& [var, coef] : other.terms_) AddTerm(var, coef);
    constant_ += other.constant_;
    return *this;
  }
  BasicLinExpr& operator-=(const BasicLinExpr& other) {
    return *this += other.Scaled(Rational(-1));
  }

  BasicLinExpr Scaled(const Rational& factor) const {
    BasicLinExpr out;
    if (factor.is_zero()) return out;
    for (const auto& [var, coef] : terms_) out.terms_.emplace(var, coef * factor);
    out.constant_ = constant_ * factor;
    return out;
  }

  // Evaluates the expression with `value(var)` supplying each variable.
  template <typename ValueFn>
  Rational Evaluate(ValueFn&& value) const {
    Rational sum = constant_;
    for (const auto& [var, coef] : terms_) sum += coef * Rational(value(var));
    return sum;
  }

  friend BasicLinExpr operator+(BasicLinExpr a, const BasicLinExpr& b) {
    return a += b;
  }
  friend BasicLinExpr operator-(BasicLinExpr a, const BasicLinExpr& b) {
    return a -= b;
  }
  friend BasicLinExpr operator*(const Rational& k, const BasicLinExpr& e) {
    return e.Scaled(k);
  }
  friend bool operator==(const BasicLinExpr&, const BasicLinExpr&) = default;

 private:
  Terms terms_;
  Rational constant_;
};

// Exact weighted sum of `parts`; coefficients that cancel are dropped.
template <typename Var>
BasicLinExpr<Var> Combine(
    const std::vector<std::pair<Rational, BasicLinExpr<Var>>>& parts) {
  BasicLinExpr<Var> sum;
  for (const auto& [weight, expr] : parts) sum += expr.Scaled(weight);
  return sum;
}

}  // namespace opnbounds

#endif  // OPNBOUNDS_LIN_EXPR_H_
