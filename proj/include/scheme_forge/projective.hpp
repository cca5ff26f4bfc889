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

#ifndef SCHEME_FORGE_PROJECTIVE_HPP
#define SCHEME_FORGE_PROJECTIVE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "scheme_forge/design.hpp"
#include "scheme_forge/finite_field.hpp"

namespace scheme_forge {

/// Points and hyperplanes of PG(m, q).
///
/// Points are the nonzero vectors of GF(q)^{m+1} whose first nonzero
/// coordinate is 1, in lexicographic order of their coordinates (element
/// indices). Hyperplane h is the kernel of the dual vector equal to point h,
/// so incidence(h, x) = 1 iff <h, x> = 0.
class ProjectiveSpace {
 public:
  static constexpr std::size_t max_points = 8192;

  using Point = std::vector<FieldTable::Element>;

  std::uint32_t dimension() const { return m_; }
  std::uint32_t order() const { return q_; }
  const FieldTable& field() const { return *field_; }
  std::size_t point_count() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& point(std::size_t i) const { return points_.at(i); }
  /// Index of the point spanned by a nonzero vector.
  std::size_t index_of(const Point& v) const;
  const SymmetricDesign& design() const { return design_; }
  /// Lines as sorted point lists, in order of their two smallest points.
  const std::vector<std::vector<std::size_t>>& lines() const { return lines_; }
  /// Points of the GF(q)-span of a set of vectors.
  std::vector<std::size_t> span(const std::vector<Point>& generators) const;

  /// d = (q^{m+1}-1)/(q-1), k = (q^m-1)/(q-1), lambda = (q^{m-1}-1)/(q-1).
  static DesignParameters expected_parameters(std::uint32_t m, std::uint32_t q);

 private:
  friend ProjectiveSpace pg_space(std::uint32_t m, std::uint32_t q);
  ProjectiveSpace(std::uint32_t m, std::uint32_t q, FieldPtr field, std::vector<Point> points, SymmetricDesign design)
      : m_(m), q_(q), field_(std::move(field)), points_(std::move(points)), design_(std::move(design)) {}

  std::uint32_t m_;
  std::uint32_t q_;
  FieldPtr field_;
  std::vector<Point> points_;
  std::map<Point, std::size_t> index_;
  SymmetricDesign design_;
  std::vector<std::vector<std::size_t>> lines_;
};

/// PG(m, q) for 2 <= m <= 4 and prime powers q <= 16, with at most
/// max_points points. Throws std::invalid_argument outside that range and
/// Error if the incidence fails design verification.
ProjectiveSpace pg_space(std::uint32_t m, std::uint32_t q);

/// q^2 + 1 pairwise disjoint lines of PG(3, q) covering every point.
struct Spread {
  std::vector<std::vector<std::size_t>> lines;
};

/// Throws Error unless the lines are lines of `space`, pairwise disjoint,
/// and cover all points.
void verify_spread(const ProjectiveSpace& space, const Spread& spread);

/// The regular (Desarguesian) spread: GF(q)^4 read as GF(q^2)^2, whose
/// q^2 + 1 one-dimensional GF(q^2)-subspaces are lines of PG(3, q).
Spread regular_spread(const ProjectiveSpace& space);

}  // namespace scheme_forge

#endif  // SCHEME_FORGE_PROJECTIVE_HPP
