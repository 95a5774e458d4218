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

#ifndef OPNBOUNDS_PARALLEL_H_
#define OPNBOUNDS_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace opnbounds {

inline unsigned DefaultJobs() {
  return std::max(1u, std::thread::hardware_concurrency());
}

// Calls fn(chunk) for chunk in [0, num_chunks) on up to `jobs` threads.
// Chunks are handed out round-robin by index; callers write into per-chunk
// slots and merge afterwards so output does not depend on `jobs`.
template <typename Fn>
void ParallelChunks(std::size_t num_chunks, unsigned jobs, Fn&& fn) {
  const unsigned n =
      static_cast<unsigned>(std::max<std::size_t>(
          1, std::min<std::size_t>(jobs == 0 ? 1 : jobs, num_chunks)));
  std::vector<std::exception_ptr> errors(n);
  auto run = [&](unsigned worker) {
    try {
      for (std::size_t c = worker; c < num_chunks; c += n) fn(c);
    } catch (...) {
      errors[worker] = std::current_exception();
    }
  };
  std::vector<std::thread> threads;
  for (unsigned w = 1; w < n; ++w) threads.emplace_back(run, w);
  run(0);
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace opnbounds

#endif  // OPNBOUNDS_PARALLEL_H_
