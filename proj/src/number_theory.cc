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

#include "opnbounds/number_theory.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "opnbounds/parallel.h"

namespace opnbounds {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialDivisionLimit = 1'000'000;

const std::vector<u64>& SmallPrimes() {
  static const std::vector<u64> primes = PrimesUpTo(kTrialDivisionLimit);
  return primes;
}

u64 MulMod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 PowMod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = MulMod(result, base, m);
    base = MulMod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Brent's variant; n must be an odd composite.
u64 PollardRho(u64 n) {
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (MulMod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 m = 128;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = MulMod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void FactorLarge(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (IsPrime(n)) {
    out.push_back(n);
    return;
  }
  const u64 d = PollardRho(n);
  FactorLarge(d, out);
  FactorLarge(n / d, out);
}

void RequirePrimeAboveThree(u64 p) {
  if (p <= 3 || !IsPrime(p)) {
    throw std::invalid_argument(std::to_string(p) +
                                " is not a prime greater than 3");
  }
}

std::vector<u64> DistinctFactors(u64 n) {
  std::vector<u64> f = Factorize(n);
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

// Lemma bound denominator for a residue class mod 3.
u64 BoundDivisor(u64 residue) { return residue == 2 ? 5 : 3; }

}  // namespace

std::vector<u64> PrimesUpTo(u64 limit) {
  std::vector<u64> primes;
  if (limit < 2) return primes;
  const u64 root = IntegerSqrt(limit);
  std::vector<char> base_composite(root + 1, 0);
  std::vector<u64> base;
  for (u64 i = 2; i <= root; ++i) {
    if (base_composite[i]) continue;
    base.push_back(i);
    for (u64 j = i * i; j <= root; j += i) base_composite[j] = 1;
  }

  constexpr u64 kSegment = 1 << 16;
  std::vector<char> composite(kSegment);
  for (u64 low = 2; low <= limit; low += kSegment) {
    const u64 high = std::min(limit, low + kSegment - 1);
    std::fill(composite.begin(), composite.end(), 0);
    for (u64 p : base) {
      if (p * p > high) break;
      u64 start = std::max(p * p, (low + p - 1) / p * p);
      for (u64 j = start; j <= high; j += p) composite[j - low] = 1;
    }
    for (u64 n = low; n <= high; ++n) {
      if (!composite[n - low]) primes.push_back(n);
    }
  }
  return primes;
}

bool IsPrime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a proven witness set for all n < 3.3 * 10^24.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> Factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("cannot factor 0");
  std::vector<u64> out;
  for (u64 p : SmallPrimes()) {
    if (p * p > n) break;
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  // Any cofactor below the square of the trial bound is 1 or prime.
  if (n > 1) {
    if (n < kTrialDivisionLimit * kTrialDivisionLimit) {
      out.push_back(n);
    } else {
      FactorLarge(n, out);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 IntegerSqrt(u64 n) {
  if (n < 2) return n;
  // Newton iteration from an overestimate; decreasing until it settles.
  u64 x = u64{1} << ((64 - __builtin_clzll(n) + 1) / 2);
  while (true) {
    const u64 y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

u64 SigmaOfSquare(u64 p) {
  if (p >= (u64{1} << 32)) throw std::out_of_range("p too large for sigma(p^2)");
  return p * p + p + 1;
}

std::string_view BucketName(Bucket b) {
  switch (b) {
    case Bucket::kS1:
      return "S1";
    case Bucket::kS2:
      return "S2";
    case Bucket::kS3Plus:
      return "S3";
  }
  return "?";
}

PrimeClass ClassifyPrime(u64 p) {
  RequirePrimeAboveThree(p);
  PrimeClass c;
  c.prime = p;
  c.sigma_value = SigmaOfSquare(p);
  c.factors = Factorize(c.sigma_value);
  c.factor_count = static_cast<int>(c.factors.size());
  c.bucket = c.factor_count == 1   ? Bucket::kS1
             : c.factor_count == 2 ? Bucket::kS2
                                   : Bucket::kS3Plus;
  c.residue = static_cast<int>(p % 3);
  return c;
}

SharedPrimeFinding SharedPrimes(u64 a, u64 b) {
  if (a == b) throw std::invalid_argument("a and b must be distinct");
  RequirePrimeAboveThree(a);
  RequirePrimeAboveThree(b);
  SharedPrimeFinding finding;
  finding.a = a;
  finding.b = b;
  finding.common =
      DistinctFactors(std::gcd(SigmaOfSquare(a), SigmaOfSquare(b)));
  if (a % 3 == b % 3) {
    finding.bound = Rational(static_cast<std::int64_t>(a + b + 1),
                             static_cast<std::int64_t>(BoundDivisor(a % 3)));
  }
  return finding;
}

Lemma1Report Lemma1Scan(u64 max_prime, unsigned jobs) {
  if (max_prime < 7) throw std::invalid_argument("max_prime must be >= 7");
  std::vector<u64> primes;
  for (u64 p : PrimesUpTo(max_prime)) {
    if (p > 3) primes.push_back(p);
  }
  std::vector<u64> sigma(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    sigma[i] = SigmaOfSquare(primes[i]);
  }

  // One chunk per larger prime a; pairs (a, b) with b < a.
  std::vector<Lemma1Report> partial(primes.size());
  ParallelChunks(primes.size(), jobs, [&](std::size_t i) {
    Lemma1Report& rep = partial[i];
    const u64 a = primes[i];
    for (std::size_t j = 0; j < i; ++j) {
      const u64 b = primes[j];
      if (a % 3 != b % 3) {
        ++rep.mixed_pairs_skipped;
        continue;
      }
      ++rep.pairs_checked;
      const u64 g = std::gcd(sigma[i], sigma[j]);
      if (g == 1) continue;
      const u64 divisor = BoundDivisor(a % 3);
      for (u64 shared : DistinctFactors(g)) {
        ++rep.shared_checked;
        // shared <= (a+b+1)/divisor, compared exactly.
        if (shared * divisor > a + b + 1) {
          rep.violations.push_back(
              {b, a, shared,
               Rational(static_cast<std::int64_t>(a + b + 1),
                        static_cast<std::int64_t>(divisor))});
        }
      }
    }
  });

  Lemma1Report report;
  report.max_prime = max_prime;
  for (const auto& rep : partial) {
    report.pairs_checked += rep.pairs_checked;
    report.shared_checked += rep.shared_checked;
    report.mixed_pairs_skipped += rep.mixed_pairs_skipped;
    report.violations.insert(report.violations.end(), rep.violations.begin(),
                             rep.violations.end());
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const Lemma1Violation& x, const Lemma1Violation& y) {
              return std::tie(x.a, x.b, x.shared) <
                     std::tie(y.a, y.b, y.shared);
            });
  return report;
}

Lemma2Report Lemma2Scan(u64 max_p, unsigned jobs) {
  if (max_p < 1 || max_p > 1'000'000'000) {
    throw std::invalid_argument("max_p must lie in [1, 10^9]");
  }
  constexpr u64 kChunk = 1 << 16;
  const std::size_t num_chunks = (max_p + kChunk - 1) / kChunk;
  std::vector<std::vector<TripleSolution>> partial(num_chunks);
  ParallelChunks(num_chunks, jobs, [&](std::size_t c) {
    const u64 lo = 1 + c * kChunk;
    const u64 hi = std::min(max_p, lo + kChunk - 1);
    for (u64 p = lo; p <= hi; ++p) {
      const u64 r = p * p + p + 1;
      // q^2 + q + 1 = 3r  <=>  (2q + 1)^2 = 12r - 3.
      const u64 disc = 12 * r - 3;
      const u64 root = IntegerSqrt(disc);
      if (root * root != disc || root % 2 == 0 || root < 3) continue;
      partial[c].push_back({p, (root - 1) / 2, r});
    }
  });

  Lemma2Report report;
  report.max_p = max_p;
  for (const auto& part : partial) {
    report.solutions.insert(report.solutions.end(), part.begin(), part.end());
  }
  for (const auto& s : report.solutions) {
    if (s.p % 2 == 1 && IsPrime(s.p)) report.odd_prime_solutions.push_back(s);
  }
  return report;
}

CensusReport BucketCensus(u64 max_prime, unsigned jobs) {
  std::vector<u64> primes;
  for (u64 p : PrimesUpTo(max_prime)) {
    if (p > 3) primes.push_back(p);
  }
  constexpr std::size_t kChunk = 512;
  const std::size_t num_chunks = (primes.size() + kChunk - 1) / kChunk;
  std::vector<std::map<std::pair<Bucket, int>, u64>> partial(num_chunks);
  ParallelChunks(num_chunks, jobs, [&](std::size_t c) {
    const std::size_t end = std::min(primes.size(), (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) {
      const PrimeClass pc = ClassifyPrime(primes[i]);
      ++partial[c][{pc.bucket, pc.residue}];
    }
  });

  CensusReport report;
  report.max_prime = max_prime;
  report.primes_classified = primes.size();
  for (Bucket b : {Bucket::kS1, Bucket::kS2, Bucket::kS3Plus}) {
    for (int residue : {1, 2}) report.counts[{b, residue}] = 0;
  }
  for (const auto& part : partial) {
    for (const auto& [key, n] : part) report.counts[key] += n;
  }
  return report;
}

}  // namespace opnbounds
