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

#ifndef SCHEME_FORGE_DENSE_SCHEME_HPP
#define SCHEME_FORGE_DENSE_SCHEME_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scheme_forge/bitset.hpp"
#include "scheme_forge/eigenmatrix.hpp"
#include "scheme_forge/translation_scheme.hpp"

namespace scheme_forge {

/// Brute-force oracle: every relation as an n x n 0/1 matrix with bitset
/// rows. Independent of the character-sum machinery.
class DenseScheme {
 public:
  static constexpr std::size_t max_points = 4096;

  /// `relations[i][x]` is row x of relation i. When `translation_invariant`
  /// is set, callers promise that (x, y) -> (x + z, y + z) preserves every
  /// relation, which lets verification work from base point 0 only.
  DenseScheme(std::vector<std::vector<DynamicBitset>> relations, bool translation_invariant);

  std::size_t points() const { return n_; }
  std::size_t classes() const { return relations_.size() - 1; }
  const DynamicBitset& row(std::size_t relation, std::size_t x) const { return relations_[relation][x]; }
  bool translation_invariant() const { return translation_invariant_; }
  /// Relation containing (x, y), found by scanning.
  std::size_t relation_of(std::size_t x, std::size_t y) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<DynamicBitset>> relations_;
  bool translation_invariant_ = false;
};

/// (x, y) in R_j iff x - y lies in a class of group j. Throws
/// std::invalid_argument above max_points.
DenseScheme dense_materialize(const TranslationScheme& s);

/// Intersection numbers p_{ij}^k, indexed [i][j][k].
using IntersectionNumbers = std::vector<std::vector<std::vector<std::int64_t>>>;

struct DenseVerification {
  bool ok = false;
  IntersectionNumbers p;
  std::string failure;
  /// Pair (x, y) at which the failure was observed.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Checks that the relations partition X x X, R_0 is the identity, every
/// R_i is symmetric, and #{z : (x,z) in R_i, (z,y) in R_j} depends only on
/// the relation of (x, y). Translation-invariant schemes are scanned from
/// x = 0 over all y; otherwise all pairs are scanned.
DenseVerification verify_scheme_dense(const DenseScheme& ds);

struct DenseSrgCheck {
  bool strongly_regular = false;
  SrgParameters parameters;
  std::string failure;
};

/// Direct test of A^2 = kI + lambda A + mu (J - I - A) over all pairs for
/// relation `relation`. Rows are split across workers; the verdict does not
/// depend on the split.
DenseSrgCheck dense_srg_check(const DenseScheme& ds, std::size_t relation);

}  // namespace scheme_forge

#endif  // SCHEME_FORGE_DENSE_SCHEME_HPP
