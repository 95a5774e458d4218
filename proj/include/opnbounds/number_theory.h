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

#ifndef OPNBOUNDS_NUMBER_THEORY_H_
#define OPNBOUNDS_NUMBER_THEORY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "opnbounds/rational.h"

namespace opnbounds {

// ---- Primitives -----------------------------------------------------------

// All primes <= limit, ascending (segmented sieve of Eratosthenes).
std::vector<std::uint64_t> PrimesUpTo(std::uint64_t limit);

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool IsPrime(std::uint64_t n);

// Prime factors of n with multiplicity, ascending. Trial division by primes
// up to 10^6, then Pollard rho (Brent) on the remaining cofactor. n >= 1.
std::vector<std::uint64_t> Factorize(std::uint64_t n);

// floor(sqrt(n)) in integer arithmetic.
std::uint64_t IntegerSqrt(std::uint64_t n);

// sigma(p^2) = p^2 + p + 1. Requires p < 2^32.
std::uint64_t SigmaOfSquare(std::uint64_t p);

// ---- Classification of S primes -------------------------------------------

enum class Bucket { kS1, kS2, kS3Plus };

std::string_view BucketName(Bucket b);

struct PrimeClass {
  std::uint64_t prime = 0;
  std::uint64_t sigma_value = 0;
  std::vector<std::uint64_t> factors;  // of sigma_value, with multiplicity
  int factor_count = 0;
  Bucket bucket = Bucket::kS1;
  int residue = 0;  // prime mod 3, 1 or 2
};

// Throws std::invalid_argument unless p is a prime > 3.
PrimeClass ClassifyPrime(std::uint64_t p);

// ---- Shared prime divisors of sigma(a^2), sigma(b^2) ----------------------

struct SharedPrimeFinding {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::vector<std::uint64_t> common;  // distinct primes, ascending
  // (a+b+1)/5 when a = b = 2 (mod 3), (a+b+1)/3 when a = b = 1 (mod 3),
  // absent for mixed residues.
  std::optional<Rational> bound;
};

// Throws std::invalid_argument if a == b or either is not a prime > 3.
SharedPrimeFinding SharedPrimes(std::uint64_t a, std::uint64_t b);

struct Lemma1Violation {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t shared = 0;
  Rational bound;
  friend bool operator==(const Lemma1Violation&,
                         const Lemma1Violation&) = default;
};

struct Lemma1Report {
  std::uint64_t max_prime = 0;
  std::uint64_t pairs_checked = 0;     // same-residue pairs
  std::uint64_t shared_checked = 0;    // (pair, shared prime) tests
  std::uint64_t mixed_pairs_skipped = 0;
  std::vector<Lemma1Violation> violations;  // sorted by (a, b, shared)
};

// Checks every shared prime of sigma(a^2), sigma(b^2) against the
// residue-appropriate bound for all pairs b < a <= max_prime of primes > 3
// with a = b (mod 3). Requires max_prime >= 7.
Lemma1Report Lemma1Scan(std::uint64_t max_prime, unsigned jobs = 1);

// ---- p^2+p+1 = r, q^2+q+1 = 3r --------------------------------------------

struct TripleSolution {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t r = 0;
  friend bool operator==(const TripleSolution&,
                         const TripleSolution&) = default;
};

struct Lemma2Report {
  std::uint64_t max_p = 0;
  std::vector<TripleSolution> solutions;         // ascending p
  std::vector<TripleSolution> odd_prime_solutions;  // expected empty
};

// Every positive integer p <= max_p admitting a positive integer q.
// Requires max_p >= 1 and max_p <= 10^9.
Lemma2Report Lemma2Scan(std::uint64_t max_p, unsigned jobs = 1);

// ---- Census ---------------------------------------------------------------

struct CensusReport {
  std::uint64_t max_prime = 0;
  std::uint64_t primes_classified = 0;
  // (bucket, residue) -> count; all six cells present.
  std::map<std::pair<Bucket, int>, std::uint64_t> counts;
};

CensusReport BucketCensus(std::uint64_t max_prime, unsigned jobs = 1);

}  // namespace opnbounds

#endif  // OPNBOUNDS_NUMBER_THEORY_H_
