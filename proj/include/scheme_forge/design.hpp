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

#ifndef SCHEME_FORGE_DESIGN_HPP
#define SCHEME_FORGE_DESIGN_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "scheme_forge/bitset.hpp"
#include "scheme_forge/eigenmatrix.hpp"

namespace scheme_forge {

/// Square 0/1 matrix with bitset rows; rows are blocks, columns points.
class Incidence {
 public:
  Incidence() = default;
  explicit Incidence(std::size_t n) : rows_(n, DynamicBitset(n)) {}
  /// From an integer matrix whose entries must all be 0 or 1.
  static Incidence from_matrix(const IntMatrix& m);

  std::size_t size() const { return rows_.size(); }
  bool operator()(std::size_t block, std::size_t point) const { return rows_[block].test(point); }
  void set(std::size_t block, std::size_t point, bool v = true) {
    if (v)
      rows_[block].set(point);
    else
      rows_[block].reset(point);
  }
  const DynamicBitset& block(std::size_t b) const { return rows_[b]; }
  /// J - M.
  Incidence complement() const;
  Incidence transpose() const;
  bool operator==(const Incidence&) const = default;

 private:
  std::vector<DynamicBitset> rows_;
};

struct DesignParameters {
  std::int64_t d = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  bool operator==(const DesignParameters&) const = default;
};

/// Symmetric 2-(d, k, lambda) design with 0 < lambda < k < d.
class SymmetricDesign {
 public:
  /// Verifies the incidence; throws Error on any violation.
  explicit SymmetricDesign(Incidence m);

  const DesignParameters& parameters() const { return params_; }
  std::int64_t points() const { return params_.d; }
  std::int64_t block_size() const { return params_.k; }
  std::int64_t lambda() const { return params_.lambda; }
  const Incidence& incidence() const { return incidence_; }

 private:
  Incidence incidence_;
  DesignParameters params_;
};

/// Checks row and column sums k, M M^T = (k - lambda) I + lambda J, and
/// 0 < lambda < k < d. Throws Error naming the offending row or pair.
DesignParameters verify_design(const Incidence& m);

/// (d, d-k, d-2k+lambda) design on J - M; throws Error when degenerate.
SymmetricDesign complement_design(const SymmetricDesign& d);

/// Principal part written as marked * M + unmarked * (J - M).
///
/// `marked` is the eigenvalue on the incidences of the design (the value
/// called r in the decomposition P0 = rM + s(J - M)); it need not be the
/// larger of the two.
struct Theorem1Decomposition {
  Eigenmatrix source;
  IntMatrix principal;
  std::int64_t valency = 0;  // f
  std::int64_t points = 0;   // |X|
  std::int64_t marked = 0;
  std::int64_t unmarked = 0;
  SymmetricDesign design;
  /// Both value-to-incidence assignments produced a design; the one with
  /// the smaller block size was kept.
  bool both_orientations = false;

  std::int64_t larger() const { return std::max(marked, unmarked); }
  std::int64_t smaller() const { return std::min(marked, unmarked); }
};

/// Extracts the symmetric design hidden in the principal part of a
/// pseudocyclic eigenmatrix whose principal part takes exactly two values.
/// For each orientation it requires k = -(s d + 1)/(r - s) to be a positive
/// integer, the incidence to be a symmetric design with that k, and
/// (r-s)^2 M M^T = |X| I + (s^2 d + 2s - f) J. Throws Error otherwise.
Theorem1Decomposition extract_design(const Eigenmatrix& p);

/// Pseudocyclic eigenmatrix with principal part marked * M + unmarked * (J-M).
/// |X| = (r-s)^2 (k - lambda) and f = s^2 d + 2s - (r-s)^2 lambda are forced;
/// throws Error when k != -(s d + 1)/(r - s), |X| != 1 + d f, or the result
/// is not a valid eigenmatrix.
Eigenmatrix synthesize_theorem1_eigenmatrix(const SymmetricDesign& design, std::int64_t marked,
                                            std::int64_t unmarked);

/// Point and block bijections with B(block_map[b], point_map[x]) = A(b, x).
struct DesignIsomorphism {
  std::vector<std::size_t> point_map;
  std::vector<std::size_t> block_map;
};

/// Backtracking isomorphism search over point maps, pruned by
/// "how many blocks contain these three points" counts and by requiring the
/// image of every partially mapped block to fit inside some block. Returns
/// nullopt on parameter mismatch or exhausted search. d <= 64.
std::optional<DesignIsomorphism> design_isomorphic(const SymmetricDesign& a, const SymmetricDesign& b);

/// Entry (i, j) depends only on (j - i) mod d.
bool is_circulant(const Incidence& m);

/// Row order under which m is circulant with its columns left in place:
/// order[t] is the row equal to row 0 cyclically shifted right by t.
/// nullopt when no such order exists.
std::optional<std::vector<std::size_t>> circulant_row_order(const Incidence& m);

Incidence permute_rows(const Incidence& m, const std::vector<std::size_t>& order);

}  // namespace scheme_forge

#endif  // SCHEME_FORGE_DESIGN_HPP
