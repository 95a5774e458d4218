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

#include "opnbounds/certificate.h"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace opnbounds {
namespace {

using json = nlohmann::json;

VerificationReport Fail(VerificationReport report, std::string reason) {
  report.pass = false;
  report.failure_reason = std::move(reason);
  return report;
}

Rational ParseRationalField(const json& value, const std::string& where) {
  if (!value.is_string()) {
    throw CertificateFormatError(where + ": rational must be a string");
  }
  try {
    return Rational::Parse(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw CertificateFormatError(where + ": " + e.what());
  }
}

const json& Require(const json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw CertificateFormatError(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

}  // namespace

VerificationReport VerifyCertificate(const ConstraintSystem& system,
                                     const Certificate& cert) {
  VerificationReport report;
  if (cert.system_case != system.system_case()) {
    return Fail(report, "system mismatch: certificate is for " +
                            std::string(CaseName(cert.system_case)));
  }

  LinExpr sum;
  for (const auto& [id, weight] : cert.multipliers) {
    const Constraint* c = system.Find(id);
    if (c == nullptr) return Fail(report, "unknown constraint: " + id);
    if (!c->is_equality() && weight.sign() < 0) {
      return Fail(report, "illegal multiplier sign on " + id);
    }
    sum += c->body.Scaled(weight);
  }

  const Rational omega_coef = sum.coefficient(VariableId::kOmega);
  if (omega_coef.sign() <= 0) return Fail(report, "no Omega contribution");
  const LinExpr normalized = sum.Scaled(Rational(1) / omega_coef);

  report.derived_slope = -normalized.coefficient(VariableId::kSmallOmega);
  report.derived_constant = -normalized.constant();
  for (VariableId v : kAllVariables) {
    if (v == VariableId::kOmega || v == VariableId::kSmallOmega) continue;
    report.residuals[v] = normalized.coefficient(v);
  }

  if (report.derived_slope != cert.claimed_slope) {
    return Fail(report, "slope mismatch: derived " +
                            report.derived_slope.ToString() + ", claimed " +
                            cert.claimed_slope.ToString());
  }
  for (const auto& [v, coef] : report.residuals) {
    if (coef.sign() > 0) {
      return Fail(report, "positive residual on " +
                              std::string(VariableName(v)) + ": " +
                              coef.ToString());
    }
  }
  if (report.derived_constant < cert.claimed_constant) {
    return Fail(report, "derived constant " +
                            report.derived_constant.ToString() +
                            " is below claimed " +
                            cert.claimed_constant.ToString());
  }
  report.pass = true;
  return report;
}

std::string RenderBound(const Rational& slope, const Rational& constant) {
  std::ostringstream os;
  os << "Ω ≥ ";
  if (slope != Rational(1)) os << slope << "·";
  os << "ω";
  if (constant.sign() < 0) {
    os << " − " << -constant;
  } else if (constant.sign() > 0) {
    os << " + " << constant;
  }
  return os.str();
}

Certificate CertificateFromJson(const std::string& text) {
  // nlohmann keeps the last value for a repeated key; reject repeats instead.
  std::vector<std::set<std::string>> seen;
  json::parser_callback_t reject_duplicates =
      [&seen](int /*depth*/, json::parse_event_t event, json& parsed) {
        if (event == json::parse_event_t::object_start) {
          seen.emplace_back();
        } else if (event == json::parse_event_t::object_end) {
          seen.pop_back();
        } else if (event == json::parse_event_t::key) {
          const auto key = parsed.get<std::string>();
          if (!seen.back().insert(key).second) {
            throw CertificateFormatError("duplicate key \"" + key + "\"");
          }
        }
        return true;
      };

  json doc;
  try {
    doc = json::parse(text, reject_duplicates);
  } catch (const json::exception& e) {
    throw CertificateFormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw CertificateFormatError("expected a JSON object");

  static const std::set<std::string> kFields = {
      "system", "include_f3_min2", "multipliers", "claimed_slope",
      "claimed_constant"};
  for (const auto& [key, value] : doc.items()) {
    if (!kFields.contains(key)) {
      throw CertificateFormatError("unknown field \"" + key + "\"");
    }
  }

  Certificate cert;
  const json& system = Require(doc, "system");
  if (!system.is_string()) throw CertificateFormatError("system: expected string");
  try {
    cert.system_case = CaseFromName(system.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw CertificateFormatError(e.what());
  }
  const json& flag = Require(doc, "include_f3_min2");
  if (!flag.is_boolean()) {
    throw CertificateFormatError("include_f3_min2: expected boolean");
  }
  cert.include_f3_min2 = flag.get<bool>();

  const json& multipliers = Require(doc, "multipliers");
  if (!multipliers.is_object()) {
    throw CertificateFormatError("multipliers: expected object");
  }
  for (const auto& [id, value] : multipliers.items()) {
    cert.multipliers.emplace(id,
                             ParseRationalField(value, "multipliers." + id));
  }
  cert.claimed_slope =
      ParseRationalField(Require(doc, "claimed_slope"), "claimed_slope");
  cert.claimed_constant =
      ParseRationalField(Require(doc, "claimed_constant"), "claimed_constant");
  return cert;
}

std::string CertificateToJson(const Certificate& cert) {
  json multipliers = json::object();
  for (const auto& [id, value] : cert.multipliers) {
    multipliers[id] = value.ToString();
  }
  json doc = {{"system", std::string(CaseName(cert.system_case))},
              {"include_f3_min2", cert.include_f3_min2},
              {"multipliers", multipliers},
              {"claimed_slope", cert.claimed_slope.ToString()},
              {"claimed_constant", cert.claimed_constant.ToString()}};
  return doc.dump(2) + "\n";
}

Certificate LoadCertificate(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CertificateFormatError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return CertificateFromJson(buffer.str());
}

void SaveCertificate(const Certificate& cert,
                     const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << CertificateToJson(cert);
}

}  // namespace opnbounds
