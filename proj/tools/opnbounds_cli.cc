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

// Command-line front end. Exit codes: 0 success or pass, 1 domain failure
// (verification failed, unbounded slope, lemma violation), 2 usage or parse
// error.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "opnbounds/certificate.h"
#include "opnbounds/enumeration.h"
#include "opnbounds/lp.h"
#include "opnbounds/model.h"
#include "opnbounds/number_theory.h"
#include "opnbounds/parallel.h"

namespace opnbounds {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string system = "three_coprime";
  std::string f3_min2;  // "", "on", "off"
  std::string slope;
  std::string slopes;
  std::string cert;
  std::string out;
  std::string format = "text";
  std::int64_t max = 0;
  std::int64_t box = 4;
  std::int64_t prime = 0;
  int which = 1;
  unsigned jobs = DefaultJobs();
};

Rational ParseRationalFlag(const std::string& flag, const std::string& text) {
  try {
    return Rational::Parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

ConstraintSystem SystemFromFlags(const Options& opt, bool default_f3_min2) {
  SystemCase c;
  try {
    c = CaseFromName(opt.system);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const bool f3_min2 = opt.f3_min2.empty() ? default_f3_min2
                                           : opt.f3_min2 == "on";
  return BuildSystem(c, f3_min2);
}

ordered_json AssignmentJson(const Assignment& a) {
  ordered_json out = ordered_json::object();
  for (const auto& [v, value] : a) {
    out[std::string(VariableName(v))] = value.ToString();
  }
  return out;
}

ordered_json ReportJson(const VerificationReport& r) {
  ordered_json out;
  out["verdict"] = r.pass ? "pass" : "fail";
  out["failure_reason"] = r.failure_reason ? ordered_json(*r.failure_reason)
                                           : ordered_json(nullptr);
  out["derived_slope"] = r.derived_slope.ToString();
  out["derived_constant"] = r.derived_constant.ToString();
  ordered_json residuals = ordered_json::object();
  for (const auto& [v, value] : r.residuals) {
    residuals[std::string(VariableName(v))] = value.ToString();
  }
  out["residuals"] = residuals;
  return out;
}

int RunDescribe(const Options& opt) {
  const ConstraintSystem system = SystemFromFlags(opt, false);
  if (opt.format == "json") {
    ordered_json rows = ordered_json::array();
    for (const Constraint& c : system.constraints()) {
      rows.push_back({{"id", c.id},
                      {"label", c.label},
                      {"relation", c.is_equality() ? "=" : ">="},
                      {"expression", RenderExpr(c.body, c.layout)}});
    }
    std::cout << rows.dump(2) << "\n";
  } else {
    std::cout << DescribeSystem(system);
  }
  return kExitOk;
}

int RunVerify(const Options& opt) {
  Certificate cert;
  try {
    cert = LoadCertificate(opt.cert);
  } catch (const CertificateFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const ConstraintSystem system = SystemFromFlags(opt, cert.include_f3_min2);
  const VerificationReport report = VerifyCertificate(system, cert);
  if (opt.format == "json") {
    std::cout << ReportJson(report).dump(2) << "\n";
  } else {
    std::cout << "system: " << CaseName(system.system_case())
              << (system.include_f3_min2() ? " (with f3_min2)" : "") << "\n";
    std::cout << "verdict: " << (report.pass ? "pass" : "fail") << "\n";
    if (report.failure_reason) {
      std::cout << "reason: " << *report.failure_reason << "\n";
    }
    if (!report.residuals.empty()) {
      std::cout << "derived: "
                << RenderBound(report.derived_slope, report.derived_constant)
                << "\n";
      std::cout << "claimed: "
                << RenderBound(cert.claimed_slope, cert.claimed_constant)
                << "\n";
      for (const auto& [v, value] : report.residuals) {
        if (!value.is_zero()) {
          std::cout << "residual " << VariableName(v) << ": " << value << "\n";
        }
      }
    }
  }
  return report.pass ? kExitOk : kExitFailure;
}

int RunOptimize(const Options& opt) {
  const ConstraintSystem system = SystemFromFlags(opt, false);
  const Rational slope = ParseRationalFlag("--slope", opt.slope);
  BoundResult bound;
  try {
    bound = BestConstant(system, slope);
  } catch (const UnsupportedSlopeError& e) {
    std::cerr << "error: " << e.what() << " (slope " << slope << ")\n";
    if (opt.format == "json") {
      std::cout << ordered_json{{"status", "unbounded"},
                                {"slope", slope.ToString()}}
                       .dump(2)
                << "\n";
    }
    return kExitFailure;
  }
  if (!opt.out.empty()) {
    SaveCertificate(bound.certificate, opt.out);
    // Re-verify what actually landed on disk.
    const VerificationReport check =
        VerifyCertificate(system, LoadCertificate(opt.out));
    if (!check.pass || check.derived_constant != bound.constant) {
      std::cerr << "error: written certificate failed to re-verify\n";
      return kExitFailure;
    }
  }
  if (opt.format == "json") {
    ordered_json out;
    out["status"] = "optimal";
    out["slope"] = slope.ToString();
    out["constant"] = bound.constant.ToString();
    out["witness"] = AssignmentJson(bound.witness);
    out["certificate"] = ordered_json::parse(CertificateToJson(bound.certificate));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << bound.constant << "\n";
    if (!opt.out.empty()) {
      std::cerr << "certificate written to " << opt.out << " (verified)\n";
    }
  }
  return kExitOk;
}

std::vector<Rational> ParseSlopeList(const std::string& text) {
  std::vector<Rational> slopes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) slopes.push_back(ParseRationalFlag("--slopes", item));
  }
  return slopes;
}

int RunFrontier(const Options& opt) {
  const ConstraintSystem system = SystemFromFlags(opt, false);
  const std::vector<Rational> slopes = ParseSlopeList(opt.slopes);
  const std::vector<FrontierRow> rows = Frontier(system, slopes, opt.jobs);
  if (!opt.out.empty()) std::filesystem::create_directories(opt.out);

  std::cout << "slope,constant,certificate_path\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const FrontierRow& row = rows[i];
    std::string path;
    if (row.bound && !opt.out.empty()) {
      path = (std::filesystem::path(opt.out) /
              ("frontier_" + std::to_string(i) + ".json"))
                 .string();
      SaveCertificate(row.bound->certificate, path);
    }
    std::cout << row.slope << ","
              << (row.bound ? row.bound->constant.ToString()
                            : std::string(LpStatusName(row.status)))
              << "," << path << "\n";
  }
  return kExitOk;
}

int RunLemmas(const Options& opt) {
  if (opt.which == 1) {
    if (opt.max < 7) throw UsageError("--max must be >= 7 for lemma 1");
    const Lemma1Report rep = Lemma1Scan(opt.max, opt.jobs);
    if (opt.format == "csv") {
      std::cout << "a,b,shared,bound\n";
      for (const auto& v : rep.violations) {
        std::cout << v.a << "," << v.b << "," << v.shared << "," << v.bound
                  << "\n";
      }
    } else if (opt.format == "json") {
      ordered_json out;
      out["lemma"] = 1;
      out["max"] = rep.max_prime;
      out["pairs_checked"] = rep.pairs_checked;
      out["shared_checked"] = rep.shared_checked;
      out["mixed_pairs_skipped"] = rep.mixed_pairs_skipped;
      ordered_json violations = ordered_json::array();
      for (const auto& v : rep.violations) {
        violations.push_back({{"a", v.a},
                              {"b", v.b},
                              {"shared", v.shared},
                              {"bound", v.bound.ToString()}});
      }
      out["violations"] = violations;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "lemma 1 scan up to " << rep.max_prime << "\n"
                << "same-residue pairs: " << rep.pairs_checked << "\n"
                << "shared primes checked: " << rep.shared_checked << "\n"
                << "mixed-residue pairs skipped: " << rep.mixed_pairs_skipped
                << "\n";
      for (const auto& v : rep.violations) {
        std::cout << "violation: a=" << v.a << " b=" << v.b
                  << " shared=" << v.shared << " bound=" << v.bound << "\n";
      }
      std::cout << rep.violations.size() << " violations\n";
    }
    return rep.violations.empty() ? kExitOk : kExitFailure;
  }

  if (opt.which != 2) throw UsageError("--which must be 1 or 2");
  if (opt.max < 1) throw UsageError("--max must be >= 1");
  const Lemma2Report rep = Lemma2Scan(opt.max, opt.jobs);
  auto is_odd_prime = [](std::uint64_t p) { return p % 2 == 1 && IsPrime(p); };
  if (opt.format == "csv") {
    std::cout << "p,q,r,p_is_odd_prime\n";
    for (const auto& s : rep.solutions) {
      std::cout << s.p << "," << s.q << "," << s.r << ","
                << (is_odd_prime(s.p) ? 1 : 0) << "\n";
    }
  } else if (opt.format == "json") {
    ordered_json out;
    out["lemma"] = 2;
    out["max"] = rep.max_p;
    ordered_json solutions = ordered_json::array();
    for (const auto& s : rep.solutions) {
      solutions.push_back({{"p", s.p},
                           {"q", s.q},
                           {"r", s.r},
                           {"p_is_odd_prime", is_odd_prime(s.p)}});
    }
    out["solutions"] = solutions;
    out["odd_prime_solutions"] = rep.odd_prime_solutions.size();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "lemma 2 scan up to " << rep.max_p << "\n";
    for (const auto& s : rep.solutions) {
      std::cout << "solution: p=" << s.p << " q=" << s.q << " r=" << s.r
                << (is_odd_prime(s.p) ? " (p odd prime)" : "") << "\n";
    }
    if (rep.odd_prime_solutions.empty()) {
      std::cout << "no odd-prime p solution; incidental solutions listed\n";
    } else {
      std::cout << rep.odd_prime_solutions.size()
                << " solutions with p an odd prime\n";
    }
  }
  return rep.odd_prime_solutions.empty() ? kExitOk : kExitFailure;
}

int RunCensus(const Options& opt) {
  if (opt.max < 1) throw UsageError("--max must be >= 1");
  const CensusReport rep = BucketCensus(opt.max, opt.jobs);
  if (opt.format == "json") {
    ordered_json out;
    out["max"] = rep.max_prime;
    out["primes_classified"] = rep.primes_classified;
    ordered_json cells = ordered_json::array();
    for (const auto& [key, n] : rep.counts) {
      cells.push_back({{"bucket", std::string(BucketName(key.first))},
                       {"residue", key.second},
                       {"count", n}});
    }
    out["counts"] = cells;
    std::cout << out.dump(2) << "\n";
  } else {
    if (opt.format == "text") {
      std::cout << "# primes 3 < p <= " << rep.max_prime << ": "
                << rep.primes_classified << "\n";
    }
    std::cout << "bucket,residue,count\n";
    for (const auto& [key, n] : rep.counts) {
      std::cout << BucketName(key.first) << "," << key.second << "," << n
                << "\n";
    }
  }
  return kExitOk;
}

int RunClassify(const Options& opt) {
  if (opt.prime < 1) throw UsageError("--prime must be positive");
  PrimeClass pc;
  try {
    pc = ClassifyPrime(opt.prime);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::string factors;
  for (std::size_t i = 0; i < pc.factors.size(); ++i) {
    factors += (i ? "*" : "") + std::to_string(pc.factors[i]);
  }
  if (opt.format == "json") {
    ordered_json out;
    out["prime"] = pc.prime;
    out["sigma"] = pc.sigma_value;
    out["factors"] = pc.factors;
    out["factor_count"] = pc.factor_count;
    out["bucket"] = std::string(BucketName(pc.bucket));
    out["residue"] = pc.residue;
    std::cout << out.dump(2) << "\n";
  } else if (opt.format == "csv") {
    std::cout << "prime,sigma,factors,factor_count,bucket,residue\n"
              << pc.prime << "," << pc.sigma_value << "," << factors << ","
              << pc.factor_count << "," << BucketName(pc.bucket) << ","
              << pc.residue << "\n";
  } else {
    std::cout << "p = " << pc.prime << "\n"
              << "p^2+p+1 = " << pc.sigma_value << " = " << factors << "\n"
              << "bucket " << BucketName(pc.bucket) << ", residue "
              << pc.residue << "\n";
  }
  return kExitOk;
}

int RunScan(const Options& opt) {
  const ConstraintSystem system = SystemFromFlags(opt, false);
  const Rational slope = ParseRationalFlag("--slope", opt.slope);
  if (opt.box < 1) throw UsageError("--box must be >= 1");
  const ScanResult result = IntegerScan(system, slope, opt.box, opt.jobs);
  if (opt.format == "json") {
    std::cout << ScanResultToJson(system, slope, opt.box, result);
    return kExitOk;
  }
  std::cout << "points scanned: " << result.points_scanned << "\n"
            << "feasible points: " << result.feasible_points << "\n";
  if (!result.minimum) {
    std::cout << "no feasible point\n";
    return kExitOk;
  }
  std::cout << "minimum: " << *result.minimum << "\nwitness:";
  for (VariableId v : kAllVariables) {
    std::cout << " " << VariableName(v) << "=" << result.witness[v];
  }
  std::cout << "\n";
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Exact bounds on Omega(N) versus omega(N) for odd perfect "
               "numbers: constraint systems, certificates, LP, number-theory "
               "scans."};
  app.require_subcommand(1);
  Options opt;

  auto add_system = [&](CLI::App* cmd) {
    cmd->add_option("--system", opt.system, "three_coprime or three_divides")
        ->check(CLI::IsMember({"three_coprime", "three_divides"}));
    cmd->add_option("--f3-min2", opt.f3_min2,
                    "include f3 - 2 >= 0 (three_divides only)")
        ->check(CLI::IsMember({"on", "off"}));
  };
  auto add_format = [&](CLI::App* cmd,
                        std::vector<std::string> formats = {"text", "csv",
                                                            "json"}) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember(formats));
  };
  auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", opt.jobs, "worker threads (output is the same "
                                        "for any value)")
        ->check(CLI::PositiveNumber);
  };

  auto* describe = app.add_subcommand("describe", "print the constraint table");
  add_system(describe);
  add_format(describe, {"text", "json"});

  auto* verify = app.add_subcommand("verify", "verify a certificate file");
  add_system(verify);
  verify->add_option("--cert", opt.cert, "certificate JSON")->required();
  add_format(verify, {"text", "json"});

  auto* optimize =
      app.add_subcommand("optimize", "best constant b for Omega >= a*omega + b");
  add_system(optimize);
  optimize->add_option("--slope", opt.slope, "slope a as n/d")->required();
  optimize->add_option("--out", opt.out, "write the dual certificate here");
  add_format(optimize, {"text", "json"});

  auto* frontier = app.add_subcommand(
      "frontier", "best constant per slope; CSV columns: slope,constant,"
                  "certificate_path (constant is 'unbounded' when the slope "
                  "is not supported)");
  add_system(frontier);
  frontier->add_option("--slopes", opt.slopes, "comma separated rationals");
  frontier->add_option("--out", opt.out, "directory for row certificates");
  add_jobs(frontier);

  auto* lemmas = app.add_subcommand(
      "lemmas", "scan the shared-prime bound (--which 1; CSV columns: "
                "a,b,shared,bound, one row per violation) or the "
                "p^2+p+1=r, q^2+q+1=3r equation (--which 2; CSV columns: "
                "p,q,r,p_is_odd_prime)");
  lemmas->add_option("--which", opt.which, "1 or 2")
      ->check(CLI::IsMember({1, 2}));
  lemmas->add_option("--max", opt.max, "largest prime (1) or p (2)")
      ->required();
  add_format(lemmas);
  add_jobs(lemmas);

  auto* census = app.add_subcommand(
      "census", "bucket counts of primes 3 < p <= max; CSV columns: "
                "bucket,residue,count");
  census->add_option("--max", opt.max, "largest prime")->required();
  add_format(census);
  add_jobs(census);

  auto* classify =
      app.add_subcommand("classify", "factor p^2+p+1 and bucket the prime");
  classify->add_option("--prime", opt.prime, "prime > 3")->required();
  add_format(classify);

  auto* scan = app.add_subcommand(
      "scan", "integer minimum of Omega - slope*omega over a box");
  add_system(scan);
  scan->add_option("--slope", opt.slope, "slope as n/d")->required();
  scan->add_option("--box", opt.box, "upper bound for each free count");
  add_format(scan, {"text", "json"});
  add_jobs(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*describe) return RunDescribe(opt);
    if (*verify) return RunVerify(opt);
    if (*optimize) return RunOptimize(opt);
    if (*frontier) return RunFrontier(opt);
    if (*lemmas) return RunLemmas(opt);
    if (*census) return RunCensus(opt);
    if (*classify) return RunClassify(opt);
    if (*scan) return RunScan(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CertificateFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace opnbounds

int main(int argc, char** argv) { return opnbounds::Main(argc, argv); }
