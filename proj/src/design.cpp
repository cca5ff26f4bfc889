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

#include "scheme_forge/design.hpp"

#include <bit>
#include <set>
#include <sstream>

#include "scheme_forge/common.hpp"

namespace scheme_forge {

Incidence Incidence::from_matrix(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("incidence matrix must be square");
  Incidence out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0 && m(r, c) != 1) throw Error("incidence matrix must be 0/1");
      if (m(r, c)) out.set(r, c);
    }
  return out;
}

Incidence Incidence::complement() const {
  Incidence out(size());
  for (std::size_t r = 0; r < size(); ++r)
    for (std::size_t c = 0; c < size(); ++c)
      if (!(*this)(r, c)) out.set(r, c);
  return out;
}

Incidence Incidence::transpose() const {
  Incidence out(size());
  for (std::size_t r = 0; r < size(); ++r)
    for (std::size_t c : rows_[r].ones()) out.set(c, r);
  return out;
}

DesignParameters verify_design(const Incidence& m) {
  const std::size_t d = m.size();
  if (d < 3) throw Error("a symmetric 2-design needs at least 3 points");
  const auto k = static_cast<std::int64_t>(m.block(0).count());
  for (std::size_t b = 0; b < d; ++b)
    if (static_cast<std::int64_t>(m.block(b).count()) != k)
      throw Error("block " + std::to_string(b) + " has size " + std::to_string(m.block(b).count()) +
                  ", expected " + std::to_string(k));
  const Incidence t = m.transpose();
  for (std::size_t x = 0; x < d; ++x)
    if (static_cast<std::int64_t>(t.block(x).count()) != k)
      throw Error("point " + std::to_string(x) + " lies on " + std::to_string(t.block(x).count()) +
                  " blocks, expected " + std::to_string(k));
  std::int64_t lambda = -1;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      const auto c = static_cast<std::int64_t>(m.block(a).intersection_count(m.block(b)));
      if (lambda < 0) lambda = c;
      if (c != lambda) {
        std::ostringstream os;
        os << "(M M^T)(" << a << ", " << b << ") = " << c << ", expected " << lambda;
        throw Error(os.str());
      }
    }
  const auto dd = static_cast<std::int64_t>(d);
  if (!(0 < lambda && lambda < k && k < dd))
    throw Error("degenerate parameters 2-(" + std::to_string(d) + ", " + std::to_string(k) + ", " +
                std::to_string(lambda) + ")");
  if (lambda * (dd - 1) != k * (k - 1)) throw Error("lambda (d - 1) != k (k - 1)");
  return {dd, k, lambda};
}

SymmetricDesign::SymmetricDesign(Incidence m) : incidence_(std::move(m)), params_(verify_design(incidence_)) {}

SymmetricDesign complement_design(const SymmetricDesign& d) {
  return SymmetricDesign(d.incidence().complement());
}

namespace {

struct Orientation {
  std::int64_t marked;
  std::int64_t unmarked;
};

std::optional<SymmetricDesign> try_orientation(const IntMatrix& p0, Orientation o, std::int64_t points,
                                               std::int64_t f, std::string& why) {
  const auto d = static_cast<std::int64_t>(p0.rows());
  const std::int64_t r = o.marked;
  const std::int64_t s = o.unmarked;
  const std::int64_t num = -checked_add(checked_mul(s, d), 1);
  const std::int64_t den = r - s;
  if (num % den != 0 || num / den <= 0) {
    why += "k = -(s d + 1)/(r - s) not a positive integer for r = " + std::to_string(r) + "; ";
    return std::nullopt;
  }
  const std::int64_t k = num / den;
  Incidence m(p0.rows());
  for (std::size_t j = 0; j < p0.rows(); ++j)
    for (std::size_t i = 0; i < p0.cols(); ++i)
      if (p0(j, i) == r) m.set(j, i);
  DesignParameters params;
  try {
    params = verify_design(m);
  } catch (const Error& e) {
    why += std::string("marking ") + std::to_string(r) + ": " + e.what() + "; ";
    return std::nullopt;
  }
  if (params.k != k) {
    why += "block size disagrees with -(s d + 1)/(r - s); ";
    return std::nullopt;
  }
  // (r - s)^2 M M^T = |X| I + (s^2 d + 2 s - f) J, entrywise.
  const std::int64_t scale = checked_mul(den, den);
  const std::int64_t off = checked_sub(checked_add(checked_mul(checked_mul(s, s), d), 2 * s), f);
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b) {
      const auto mm = static_cast<std::int64_t>(m.block(a).intersection_count(m.block(b)));
      const std::int64_t rhs = (a == b ? points : 0) + off;
      if (checked_mul(scale, mm) != rhs) {
        why += "(r-s)^2 M M^T identity fails; ";
        return std::nullopt;
      }
    }
  return SymmetricDesign(std::move(m));
}

}  // namespace

Theorem1Decomposition extract_design(const Eigenmatrix& p) {
  if (!is_pseudocyclic(p)) throw Error("eigenmatrix is not pseudocyclic");
  const IntMatrix p0 = p.principal_part();
  std::set<std::int64_t> values;
  for (std::size_t j = 0; j < p0.rows(); ++j)
    for (std::size_t i = 0; i < p0.cols(); ++i) values.insert(p0(j, i));
  if (values.size() != 2)
    throw Error("principal part takes " + std::to_string(values.size()) + " distinct values, expected 2");
  const std::int64_t lo = *values.begin();
  const std::int64_t hi = *values.rbegin();
  const std::int64_t f = p(0, 1);
  const std::int64_t points = p.point_count();

  std::string why;
  auto with_hi = try_orientation(p0, {hi, lo}, points, f, why);
  auto with_lo = try_orientation(p0, {lo, hi}, points, f, why);
  if (!with_hi && !with_lo) throw Error("no orientation of the principal part is a symmetric design: " + why);

  const bool both = with_hi && with_lo;
  bool pick_hi = with_hi.has_value();
  if (both) pick_hi = with_hi->block_size() <= with_lo->block_size();
  const Orientation o = pick_hi ? Orientation{hi, lo} : Orientation{lo, hi};
  return Theorem1Decomposition{p, p0, f, points, o.marked, o.unmarked, pick_hi ? std::move(*with_hi) : std::move(*with_lo),
                               both};
}

Eigenmatrix synthesize_theorem1_eigenmatrix(const SymmetricDesign& design, std::int64_t marked,
                                            std::int64_t unmarked) {
  const std::int64_t d = design.points();
  const std::int64_t k = design.block_size();
  const std::int64_t lambda = design.lambda();
  const std::int64_t diff = marked - unmarked;
  if (diff == 0 || checked_mul(k, diff) != -checked_add(checked_mul(unmarked, d), 1))
    throw Error("k != -(s d + 1)/(r - s)");
  const std::int64_t points = checked_mul(checked_mul(diff, diff), k - lambda);
  const std::int64_t f = checked_sub(checked_add(checked_mul(checked_mul(unmarked, unmarked), d), 2 * unmarked),
                                     checked_mul(checked_mul(diff, diff), lambda));
  if (f <= 0 || checked_add(1, checked_mul(d, f)) != points) throw Error("|X| != 1 + d f for these eigenvalues");
  const auto n = static_cast<std::size_t>(d);
  IntMatrix p(n + 1, n + 1);
  p(0, 0) = 1;
  for (std::size_t i = 1; i <= n; ++i) p(0, i) = f;
  for (std::size_t j = 1; j <= n; ++j) {
    p(j, 0) = 1;
    for (std::size_t i = 1; i <= n; ++i) p(j, i) = design.incidence()(j - 1, i - 1) ? marked : unmarked;
  }
  return Eigenmatrix(std::move(p));
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Incidence& a, const Incidence& b) : d_(a.size()) {
    a_through_ = through(a);
    b_through_ = through(b);
    a_blocks_ = blocks(a);
    const std::uint64_t all = d_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d_) - 1;
    cand_a_.assign(d_, all);
    cand_b_.assign(d_, all);
    map_.assign(d_, 0);
  }

  std::optional<DesignIsomorphism> run() {
    if (!extend(0)) return std::nullopt;
    DesignIsomorphism iso;
    iso.point_map = map_;
    iso.block_map.resize(d_);
    for (std::size_t b = 0; b < d_; ++b) iso.block_map[b] = static_cast<std::size_t>(std::countr_zero(cand_b_[b]));
    return iso;
  }

 private:
  static std::vector<std::uint64_t> through(const Incidence& m) {
    std::vector<std::uint64_t> out(m.size(), 0);
    for (std::size_t b = 0; b < m.size(); ++b)
      for (std::size_t x : m.block(b).ones()) out[x] |= std::uint64_t{1} << b;
    return out;
  }
  static std::vector<std::uint64_t> blocks(const Incidence& m) {
    std::vector<std::uint64_t> out(m.size(), 0);
    for (std::size_t b = 0; b < m.size(); ++b)
      for (std::size_t x : m.block(b).ones()) out[b] |= std::uint64_t{1} << x;
    return out;
  }

  // cand_a_[b]: A-blocks agreeing with block b on the mapped points.
  // cand_b_[b]: B-blocks agreeing with the image of b on the mapped images.
  // An isomorphism extending the current map needs equal sizes for all b.
  bool extend(std::size_t x) {
    if (x == d_) return true;
    const auto saved_a = cand_a_;
    const auto saved_b = cand_b_;
    for (std::size_t y = 0; y < d_; ++y) {
      if (used_ >> y & 1U) continue;
      bool ok = true;
      for (std::size_t b = 0; b < d_ && ok; ++b) {
        if (a_blocks_[b] >> x & 1U) {
          cand_a_[b] &= a_through_[x];
          cand_b_[b] &= b_through_[y];
        } else {
          cand_a_[b] &= ~a_through_[x];
          cand_b_[b] &= ~b_through_[y];
        }
        ok = std::popcount(cand_a_[b]) == std::popcount(cand_b_[b]);
      }
      if (ok) {
        map_[x] = y;
        used_ |= std::uint64_t{1} << y;
        if (extend(x + 1)) return true;
        used_ &= ~(std::uint64_t{1} << y);
      }
      cand_a_ = saved_a;
      cand_b_ = saved_b;
    }
    return false;
  }

  std::size_t d_;
  std::vector<std::uint64_t> a_through_;
  std::vector<std::uint64_t> b_through_;
  std::vector<std::uint64_t> a_blocks_;
  std::vector<std::uint64_t> cand_a_;
  std::vector<std::uint64_t> cand_b_;
  std::vector<std::size_t> map_;
  std::uint64_t used_ = 0;
};

}  // namespace

std::optional<DesignIsomorphism> design_isomorphic(const SymmetricDesign& a, const SymmetricDesign& b) {
  if (a.parameters() != b.parameters()) return std::nullopt;
  if (a.points() > 64) throw std::invalid_argument("design isomorphism search limited to 64 points");
  auto iso = IsomorphismSearch(a.incidence(), b.incidence()).run();
  if (!iso) return std::nullopt;
  // Independent confirmation of the witness.
  const auto d = static_cast<std::size_t>(a.points());
  for (std::size_t blk = 0; blk < d; ++blk)
    for (std::size_t x = 0; x < d; ++x)
      if (a.incidence()(blk, x) != b.incidence()(iso->block_map[blk], iso->point_map[x]))
        throw std::logic_error("isomorphism witness does not map incidences");
  return iso;
}

bool is_circulant(const Incidence& m) {
  const std::size_t d = m.size();
  for (std::size_t i = 1; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (m(i, j) != m(0, (j + d - i) % d)) return false;
  return true;
}

std::optional<std::vector<std::size_t>> circulant_row_order(const Incidence& m) {
  const std::size_t d = m.size();
  std::vector<std::size_t> order(d);
  std::vector<bool> used(d, false);
  for (std::size_t t = 0; t < d; ++t) {
    DynamicBitset shifted(d);
    for (std::size_t x : m.block(0).ones()) shifted.set((x + t) % d);
    bool found = false;
    for (std::size_t r = 0; r < d && !found; ++r) {
      if (!used[r] && m.block(r) == shifted) {
        used[r] = true;
        order[t] = r;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return order;
}

Incidence permute_rows(const Incidence& m, const std::vector<std::size_t>& order) {
  Incidence out(m.size());
  for (std::size_t t = 0; t < order.size(); ++t)
    for (std::size_t x : m.block(order[t]).ones()) out.set(t, x);
  return out;
}

}  // namespace scheme_forge
