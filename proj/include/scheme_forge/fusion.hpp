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

#ifndef SCHEME_FORGE_FUSION_HPP
#define SCHEME_FORGE_FUSION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scheme_forge/design.hpp"
#include "scheme_forge/eigenmatrix.hpp"
#include "scheme_forge/projective.hpp"

namespace scheme_forge {

/// Partition Lambda_0 = {0}, Lambda_1, ..., Lambda_{d'} of the relation
/// indices {0, ..., d}.
class FusionPartition {
 public:
  /// `parts` must include {0} as its first part. Throws
  /// std::invalid_argument if it is not a partition of {0, ..., d}.
  FusionPartition(std::vector<std::vector<std::size_t>> parts, std::size_t d);
  /// Lambda_0 = {0} is prepended to the given nontrivial parts.
  static FusionPartition from_nontrivial(std::vector<std::vector<std::size_t>> parts, std::size_t d);
  static FusionPartition singletons(std::size_t d);

  std::size_t fused_classes() const { return parts_.size() - 1; }
  const std::vector<std::vector<std::size_t>>& parts() const { return parts_; }

 private:
  std::vector<std::vector<std::size_t>> parts_;
};

struct FusionResult {
  bool ok = false;
  std::optional<Eigenmatrix> fused;
  /// Delta_i: eigenmatrix rows merged into fused row i.
  std::vector<std::vector<std::size_t>> row_classes;
  std::string diagnostic;
};

/// Bannai-Muzychuk: sums the columns of P over each Lambda_j, groups the
/// rows by the resulting signature (classes numbered by first occurrence),
/// and succeeds iff row 0 is alone and there are exactly d' + 1 classes.
/// The fused eigenmatrix is validated (orthogonality, integral
/// multiplicities) and its multiplicities must equal the summed
/// multiplicities of each Delta_i.
FusionResult bannai_muzychuk(const Eigenmatrix& p, const FusionPartition& part);

struct AmorphyResult {
  bool amorphous = false;
  std::uint64_t partitions_checked = 0;
  /// First partition (over {1..d}) that failed the criterion.
  std::optional<std::vector<std::vector<std::size_t>>> counterexample;
};

/// Runs the fusion criterion on every partition of {1, ..., d} (Bell(d) of
/// them, restricted-growth order). Throws std::invalid_argument for d > 12.
AmorphyResult is_amorphous(const Eigenmatrix& p);

/// Class-3 eigenmatrix for a symmetric 2-(d,k,lambda) design hidden in a
/// pseudocyclic scheme with valency f and eigenvalues r (on incidences) and s.
IntMatrix block_fusion_class3_formula(std::int64_t f, std::int64_t k, std::int64_t lambda, std::int64_t d,
                                     std::int64_t r, std::int64_t s);
/// Class-2 eigenmatrix obtained by merging the first two relations of the above.
IntMatrix block_fusion_class2_formula(std::int64_t f, std::int64_t k, std::int64_t lambda, std::int64_t d,
                                     std::int64_t r, std::int64_t s);

struct BlockFusion {
  FusionPartition partition;
  Eigenmatrix class3;
  Eigenmatrix class2;
};

/// Fuses along a block B of the extracted design: Lambda_1 = {least point
/// of B}, Lambda_2 = the other points of B, Lambda_3 = the points off B
/// (points are relation indices). The class-2 scheme merges Lambda_1 and
/// Lambda_2 of the class-3 result. Both are checked against the closed
/// forms; a mismatch or criterion failure throws std::logic_error.
BlockFusion design_block_fusion(const Theorem1Decomposition& t, std::size_t block);

/// Relation/point alignment between an extracted design and PG(m, q).
struct PgAlignment {
  /// pg point of relation i + 1
  std::vector<std::size_t> point_of_relation;
  std::vector<std::size_t> relation_of_point;  // 1-based relation index
};

/// Finds an isomorphism between the extracted design and PG(m, q) and checks
/// P0 = rM + s(J - M) for the PG incidence under it. Throws Error when the
/// design is not isomorphic to PG(m, q).
PgAlignment align_to_pg(const Theorem1Decomposition& t, const ProjectiveSpace& space);

/// Closed form of the class q+2 fusion along a line.
IntMatrix line_fusion_formula(std::int64_t f, std::int64_t d, std::int64_t k, std::int64_t q, std::int64_t r,
                              std::int64_t s);
/// Closed form of the class q^2+1 fusion along a spread.
IntMatrix spread_fusion_formula(std::int64_t f, std::int64_t q, std::int64_t r, std::int64_t s);

struct GeometricFusion {
  FusionPartition partition;
  Eigenmatrix fused;
};

/// Parts: {0}, the relations off the line as one part, then each relation
/// on the line alone (in line order). The result must match the closed form
/// exactly; a mismatch throws std::logic_error.
GeometricFusion line_fusion(const Eigenmatrix& p, const ProjectiveSpace& space, std::size_t line);
GeometricFusion line_fusion(const Theorem1Decomposition& t, const ProjectiveSpace& space, const PgAlignment& align,
                            std::size_t line);

/// Parts: {0}, then the relations on each spread line. Requires m = 3.
GeometricFusion spread_fusion(const Eigenmatrix& p, const ProjectiveSpace& space, const Spread& spread);
GeometricFusion spread_fusion(const Theorem1Decomposition& t, const ProjectiveSpace& space, const PgAlignment& align,
                              const Spread& spread);

}  // namespace scheme_forge

#endif  // SCHEME_FORGE_FUSION_HPP
