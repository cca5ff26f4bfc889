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

#ifndef SCHEME_FORGE_CYCLOTOMY_HPP
#define SCHEME_FORGE_CYCLOTOMY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "scheme_forge/finite_field.hpp"

namespace scheme_forge {

class Eigenmatrix;

/// An additive character sum over a set S, kept exactly as trace counts:
/// counts[j] = #{x in S : Tr(x) = j}, so the sum is sum_j counts[j] zeta_p^j.
struct CharacterSum {
  std::vector<std::int64_t> counts;

  /// The integer value when the sum is rational. For p = 2 always
  /// counts[0] - counts[1]; for odd p only when counts[1..p-1] agree.
  std::optional<std::int64_t> rational_value() const;
  CharacterSum& operator+=(const CharacterSum& other);
  bool operator==(const CharacterSum&) const = default;
};

/// The cyclotomic classes C_i = alpha^i <alpha^e> of GF(q) and their
/// Gaussian periods eta_i = sum over C_i of the canonical additive character.
class CyclotomicFrame {
 public:
  /// Throws std::invalid_argument unless e divides q - 1.
  static std::shared_ptr<const CyclotomicFrame> build(FieldPtr field, std::uint32_t e);

  const FieldTable& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::uint32_t classes() const { return e_; }
  std::uint32_t class_size() const { return class_size_; }

  /// dlog(x) mod e for nonzero x.
  std::uint32_t class_of(FieldTable::Element x) const { return field_->dlog(x) % e_; }
  /// Elements of C_i in dlog order.
  std::vector<FieldTable::Element> class_elements(std::uint32_t i) const;

  const CharacterSum& period_counts(std::uint32_t i) const { return counts_[i]; }
  /// eta_i, or nullopt when it is irrational.
  std::optional<std::int64_t> period(std::uint32_t i) const { return periods_[i]; }
  bool periods_rational() const;
  /// All periods; throws Error if any is irrational.
  std::vector<std::int64_t> integral_periods() const;

  /// -1 lies in <alpha^e>, i.e. every relation x - y in C_i is symmetric.
  bool symmetric() const;

 private:
  CyclotomicFrame() = default;

  FieldPtr field_;
  std::uint32_t e_ = 0;
  std::uint32_t class_size_ = 0;
  std::vector<CharacterSum> counts_;
  std::vector<std::optional<std::int64_t>> periods_;
};

using FramePtr = std::shared_ptr<const CyclotomicFrame>;

/// First eigenmatrix of the class-e cyclotomic scheme: row 0 holds the
/// valencies and entry (1+j, 1+i) is eta_{(i+j) mod e}, the eigenvalue of
/// the class-C_i Cayley graph at the characters x -> psi(a x), a in C_j.
/// Throws Error (carrying the trace counts) when some period is irrational.
Eigenmatrix cyclotomic_eigenmatrix(const CyclotomicFrame& frame);

/// Cyclotomic scheme of class e on GF(p^m) is amorphous iff m is even and
/// e divides p^{m'} + 1 for some divisor m' of m/2.
bool amorphous_cyclotomic_predicate(std::uint32_t p, std::uint32_t m, std::uint32_t e);

}  // namespace scheme_forge

#endif  // SCHEME_FORGE_CYCLOTOMY_HPP
