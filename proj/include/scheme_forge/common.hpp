// Copyright 2026 The scheme-forge Authors
//
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

#ifndef SCHEME_FORGE_COMMON_HPP
#define SCHEME_FORGE_COMMON_HPP

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace scheme_forge {

/// Raised when an input is mathematically inconsistent with what an
/// operation requires (not a scheme, not a design, irrational periods ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 addition overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 multiplication overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 subtraction overflow");
  return r;
}

/// Worker count for the parallel kernels: SCHEME_FORGE_THREADS if set and
/// positive, otherwise the hardware concurrency (at least 1).
unsigned worker_count();

/// Splits [0, n) into contiguous chunks, one per worker, and runs
/// fn(begin, end, chunk_index) on each. Chunk boundaries depend only on n
/// and the worker count.
template <typename Fn>
void parallel_chunks(std::size_t n, Fn&& fn);

bool is_prime(std::uint64_t n);

/// Distinct prime divisors by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace scheme_forge

#include "scheme_forge/parallel.inl"

#endif  // SCHEME_FORGE_COMMON_HPP
