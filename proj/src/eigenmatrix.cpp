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

#include "scheme_forge/eigenmatrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "scheme_forge/common.hpp"

namespace scheme_forge {

namespace {

using Wide = __int128;

Wide wide_mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("128-bit multiplication overflow");
  return r;
}

Wide wide_add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("128-bit addition overflow");
  return r;
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void check_shape(const IntMatrix& p) {
  if (p.rows() < 2 || p.rows() != p.cols()) throw Error("eigenmatrix must be square with at least one class");
  for (std::size_t j = 0; j < p.rows(); ++j)
    if (p(j, 0) != 1) throw Error("first column of an eigenmatrix must be all ones");
  for (std::size_t i = 0; i < p.cols(); ++i)
    if (p(0, i) <= 0) throw Error("valencies must be positive");
  if (p(0, 0) != 1) throw Error("k_0 must be 1");
}

// lcm of the valencies together with sum_i P_ji^2 * (L / k_i) per row.
struct Norms {
  Wide lcm = 1;
  std::vector<Wide> row_norms;
};

Norms row_norms(const IntMatrix& p) {
  Norms n;
  for (std::size_t i = 0; i < p.cols(); ++i) {
    const Wide k = p(0, i);
    n.lcm = wide_mul(n.lcm / wide_gcd(n.lcm, k), k);
  }
  n.row_norms.resize(p.rows(), 0);
  for (std::size_t j = 0; j < p.rows(); ++j) {
    Wide acc = 0;
    for (std::size_t i = 0; i < p.cols(); ++i) {
      const Wide v = p(j, i);
      acc = wide_add(acc, wide_mul(wide_mul(v, v), n.lcm / p(0, i)));
    }
    n.row_norms[j] = acc;
  }
  return n;
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * m.cols_));
  }
  return m;
}

std::vector<std::int64_t> IntMatrix::row(std::size_t r) const {
  const auto first = data_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
  return {first, first + static_cast<std::ptrdiff_t>(cols_)};
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

std::vector<std::int64_t> multiplicities_from_eigenmatrix(const IntMatrix& p) {
  check_shape(p);
  std::int64_t points = 0;
  for (std::size_t i = 0; i < p.cols(); ++i) points = checked_add(points, p(0, i));
  const Norms n = row_norms(p);
  std::vector<std::int64_t> m(p.rows());
  for (std::size_t j = 0; j < p.rows(); ++j) {
    const Wide num = wide_mul(points, n.lcm);
    if (n.row_norms[j] == 0 || num % n.row_norms[j] != 0)
      throw Error("multiplicity of row " + std::to_string(j) + " is not an integer");
    const Wide mj = num / n.row_norms[j];
    if (mj <= 0 || mj > points) throw Error("multiplicity of row " + std::to_string(j) + " out of range");
    m[j] = static_cast<std::int64_t>(mj);
  }
  return m;
}

std::int64_t orthogonality_residual(const IntMatrix& p, const std::vector<std::int64_t>& multiplicities) {
  check_shape(p);
  const Norms n = row_norms(p);
  std::int64_t points = 0;
  for (std::size_t i = 0; i < p.cols(); ++i) points += p(0, i);
  std::vector<Wide> scaled_k(p.cols());
  for (std::size_t i = 0; i < p.cols(); ++i) scaled_k[i] = n.lcm / p(0, i);

  Wide worst = 0;
  for (std::size_t j = 0; j < p.rows(); ++j) {
    for (std::size_t l = j; l < p.rows(); ++l) {
      Wide acc = 0;
      for (std::size_t i = 0; i < p.cols(); ++i)
        acc = wide_add(acc, wide_mul(wide_mul(p(j, i), p(l, i)), scaled_k[i]));
      if (j == l) {
        // |X| L / m_j
        const Wide target = wide_mul(points, n.lcm);
        acc = wide_mul(acc, multiplicities[j]) - target;
      }
      worst = std::max(worst, acc < 0 ? -acc : acc);
    }
  }
  if (worst > static_cast<Wide>(INT64_MAX)) return INT64_MAX;
  return static_cast<std::int64_t>(worst);
}

Eigenmatrix::Eigenmatrix(IntMatrix entries) : entries_(std::move(entries)) {
  multiplicities_ = multiplicities_from_eigenmatrix(entries_);
  for (std::size_t i = 0; i < entries_.cols(); ++i) points_ = checked_add(points_, entries_(0, i));
  std::int64_t total = 0;
  for (std::int64_t m : multiplicities_) total = checked_add(total, m);
  if (total != points_) throw Error("multiplicities do not sum to the number of points");
  if (orthogonality_residual(entries_, multiplicities_) != 0) throw Error("orthogonality relations fail");
}

IntMatrix Eigenmatrix::principal_part() const {
  const std::size_t d = classes();
  IntMatrix out(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) out(j, i) = entries_(j + 1, i + 1);
  return out;
}

bool is_pseudocyclic(const Eigenmatrix& p) {
  const auto& m = p.multiplicities();
  for (std::size_t j = 2; j < m.size(); ++j)
    if (m[j] != m[1]) return false;
  const auto k = p.valencies();
  for (std::size_t i = 1; i < k.size(); ++i)
    if (k[i] != m[1]) throw std::logic_error("pseudocyclic eigenmatrix with a valency different from the multiplicity");
  return true;
}

IntMatrix canonical_row_order(const IntMatrix& p) {
  auto rows = p.to_rows();
  if (rows.size() > 1) std::sort(rows.begin() + 1, rows.end());
  return IntMatrix::from_rows(rows);
}

SrgParameters srg_from_spectrum(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t s) {
  if (k < 1) throw Error("SRG valency must be positive");
  if (r <= s) throw Error("SRG eigenvalues must satisfy r > s");
  SrgParameters out;
  out.n = n;
  out.k = k;
  out.mu = checked_add(k, checked_mul(r, s));
  out.lambda = checked_add(out.mu, checked_add(r, s));
  const std::int64_t lhs = checked_mul(checked_sub(checked_sub(n, 1), k), out.mu);
  const std::int64_t rhs = checked_mul(k, checked_sub(checked_sub(k, 1), out.lambda));
  if (lhs != rhs || out.mu < 0 || out.lambda < 0)
    throw Error("infeasible SRG parameters (" + std::to_string(n) + ", " + std::to_string(k) + ", " +
                std::to_string(out.lambda) + ", " + std::to_string(out.mu) + ")");
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << "]\n";
  }
  return os.str();
}

}  // namespace scheme_forge
