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

#ifndef SCHEME_FORGE_TRANSLATION_SCHEME_HPP
#define SCHEME_FORGE_TRANSLATION_SCHEME_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "scheme_forge/cyclotomy.hpp"
#include "scheme_forge/eigenmatrix.hpp"

namespace scheme_forge {

/// Relations on GF(q) obtained by merging cyclotomic classes: (x, y) is in
/// relation j (1 <= j <= d) iff x - y lies in the union of the classes in
/// group j. Relation 0 is the diagonal.
class TranslationScheme {
 public:
  /// `groups` must partition {0, ..., e-1} into nonempty parts; throws
  /// std::invalid_argument otherwise.
  TranslationScheme(FramePtr frame, std::vector<std::vector<std::uint32_t>> groups);

  /// Every class its own relation: the cyclotomic scheme itself.
  static TranslationScheme cyclotomic(FramePtr frame);

  /// Groups Lambda_k = { a (step (k-1) + stride i) mod e : i = 0..count-1 }
  /// for k = 1..e/count, the union rule used by the published examples.
  /// Throws std::invalid_argument if that is not a partition.
  static TranslationScheme cyclic_union(FramePtr frame, std::uint32_t step, std::uint32_t count, std::uint32_t stride,
                                        std::int64_t a);

  const CyclotomicFrame& frame() const { return *frame_; }
  const FramePtr& frame_ptr() const { return frame_; }
  std::size_t relations() const { return groups_.size(); }
  /// Classes of relation j, 1 <= j <= d.
  const std::vector<std::uint32_t>& group(std::size_t j) const { return groups_.at(j - 1); }
  const std::vector<std::vector<std::uint32_t>>& groups() const { return groups_; }
  /// Relation index (1..d) containing cyclotomic class c.
  std::size_t relation_of_class(std::uint32_t c) const { return relation_of_class_.at(c); }
  /// Relation index of the pair (0, x): 0 for x = 0.
  std::size_t relation_of_difference(FieldTable::Element x) const;
  std::int64_t valency(std::size_t j) const;

 private:
  FramePtr frame_;
  std::vector<std::vector<std::uint32_t>> groups_;
  std::vector<std::size_t> relation_of_class_;
};

/// First eigenmatrix of the translation scheme computed straight from the
/// Gaussian periods: character class j contributes the row
/// (sum_{i in Lambda_l} eta_{i+j})_l, and equal rows collapse into one
/// eigenspace. Group sums are evaluated on trace counts, so a group may be
/// rational even when its individual periods are not. Throws Error when a
/// group sum is irrational or the number of distinct rows differs from
/// d + 1 (the partition does not define a scheme).
Eigenmatrix translation_eigenmatrix(const TranslationScheme& s);

enum class SrgStatus { strongly_regular, degenerate, not_strongly_regular };

struct SrgReport {
  std::size_t relation = 0;
  SrgStatus status = SrgStatus::not_strongly_regular;
  std::int64_t n = 0;
  std::int64_t k = 0;
  /// r > s when strongly regular; single value when degenerate.
  std::int64_t r = 0;
  std::int64_t s = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;
  /// Multiplicities of r and s as eigenvalues of the adjacency matrix.
  std::int64_t r_multiplicity = 0;
  std::int64_t s_multiplicity = 0;
  /// Sorted distinct nontrivial eigenvalues.
  std::vector<std::int64_t> values;
};

std::string to_string(SrgStatus s);

/// Strong regularity of relation `relation` from its character values
/// sum_{i in Lambda} eta_{i+j}, j = 0..e-1. Two distinct values make an
/// SRG; a single value is reported as degenerate. Throws Error on an
/// irrational value.
SrgReport srg_check_translation(const TranslationScheme& s, std::size_t relation);

/// Parses a group specification: "cyclic:STEP,COUNT,STRIDE,a", a JSON array
/// of arrays of class indices, or "singletons".
TranslationScheme parse_groups(FramePtr frame, const std::string& spec);

}  // namespace scheme_forge

#endif  // SCHEME_FORGE_TRANSLATION_SCHEME_HPP
