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

#ifndef SCHEME_FORGE_EIGENMATRIX_HPP
#define SCHEME_FORGE_EIGENMATRIX_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace scheme_forge {

/// Row-major dense integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<std::int64_t> row(std::size_t r) const;
  std::vector<std::vector<std::int64_t>> to_rows() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Exact first eigenmatrix of a symmetric association scheme of class d.
///
/// Entry (j, i) is the eigenvalue of relation i on eigenspace j. Row 0 holds
/// the valencies and column 0 is all ones. Construction derives the
/// multiplicities m_j = |X| / sum_i P_ji^2 / k_i and checks that they are
/// positive integers summing to |X| and that the orthogonality relations
/// sum_i P_ji P_li / k_i = delta_jl |X| / m_j hold exactly. Any failure
/// throws Error.
class Eigenmatrix {
 public:
  explicit Eigenmatrix(IntMatrix entries);

  std::size_t classes() const { return entries_.rows() - 1; }
  std::int64_t operator()(std::size_t j, std::size_t i) const { return entries_(j, i); }
  const IntMatrix& entries() const { return entries_; }
  std::int64_t point_count() const { return points_; }
  std::vector<std::int64_t> valencies() const { return entries_.row(0); }
  const std::vector<std::int64_t>& multiplicities() const { return multiplicities_; }
  /// Lower-right d x d block.
  IntMatrix principal_part() const;

  bool operator==(const Eigenmatrix& o) const { return entries_ == o.entries_; }

 private:
  IntMatrix entries_;
  std::int64_t points_ = 0;
  std::vector<std::int64_t> multiplicities_;
};

/// m_j = |X| / sum_i P_ji^2 / k_i for a raw matrix with the eigenmatrix
/// shape. Throws Error if some multiplicity is not a positive integer.
std::vector<std::int64_t> multiplicities_from_eigenmatrix(const IntMatrix& p);

/// Largest |sum_i P_ji P_li / k_i - delta_jl |X| / m_j|, scaled by lcm(k_i)
/// so that it is an integer; zero exactly when orthogonality holds.
std::int64_t orthogonality_residual(const IntMatrix& p, const std::vector<std::int64_t>& multiplicities);

/// m_1 = ... = m_d. When that holds the valencies must coincide with m_1;
/// a violation throws std::logic_error.
bool is_pseudocyclic(const Eigenmatrix& p);

/// Copy with the nontrivial rows (1..d) sorted lexicographically. Printed
/// eigenmatrices are only determined up to the order of those rows.
IntMatrix canonical_row_order(const IntMatrix& p);

struct SrgParameters {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;
  bool operator==(const SrgParameters&) const = default;
};

/// The SRG parameters forced by spectrum {k, r, s}: mu = k + rs,
/// lambda = mu + r + s. Throws Error when r <= s, k < 1, or
/// (n - 1 - k) mu != k (k - 1 - lambda).
SrgParameters srg_from_spectrum(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t s);

std::string to_string(const IntMatrix& m);

}  // namespace scheme_forge

#endif  // SCHEME_FORGE_EIGENMATRIX_HPP
