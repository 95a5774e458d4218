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

#ifndef OPNBOUNDS_CERTIFICATE_H_
#define OPNBOUNDS_CERTIFICATE_H_

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "opnbounds/model.h"
#include "opnbounds/rational.h"

namespace opnbounds {

// Rational multipliers, one per constraint id, whose weighted sum of
// constraint bodies proves Omega >= claimed_slope * omega + claimed_constant
// once nonpositive coefficients on the remaining (nonnegative) variables are
// discarded. Inequality multipliers must be >= 0; equality multipliers are
// signed.
struct Certificate {
  SystemCase system_case = SystemCase::kThreeCoprime;
  bool include_f3_min2 = false;
  std::map<std::string, Rational> multipliers;
  Rational claimed_slope;
  Rational claimed_constant;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct VerificationReport {
  Rational derived_slope;
  Rational derived_constant;
  // Normalized coefficient of every variable other than Omega and omega.
  std::map<VariableId, Rational> residuals;
  bool pass = false;
  std::optional<std::string> failure_reason;
};

VerificationReport VerifyCertificate(const ConstraintSystem& system,
                                     const Certificate& cert);

// "Ω ≥ 8/3·ω − 7/3"
std::string RenderBound(const Rational& slope, const Rational& constant);

class CertificateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON schema:
//   {"system": "three_coprime"|"three_divides", "include_f3_min2": bool,
//    "multipliers": {"<constraint-id>": "<rational>"},
//    "claimed_slope": "<rational>", "claimed_constant": "<rational>"}
// Parsing rejects unknown fields, duplicate keys, missing fields and
// malformed rationals with CertificateFormatError.
Certificate CertificateFromJson(const std::string& text);
std::string CertificateToJson(const Certificate& cert);

Certificate LoadCertificate(const std::filesystem::path& path);
void SaveCertificate(const Certificate& cert,
                     const std::filesystem::path& path);

}  // namespace opnbounds

#endif  // OPNBOUNDS_CERTIFICATE_H_
