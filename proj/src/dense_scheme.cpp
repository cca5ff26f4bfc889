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

#include "scheme_forge/dense_scheme.hpp"

#include <sstream>

#include "scheme_forge/common.hpp"

namespace scheme_forge {

DenseScheme::DenseScheme(std::vector<std::vector<DynamicBitset>> relations, bool translation_invariant)
    : relations_(std::move(relations)), translation_invariant_(translation_invariant) {
  if (relations_.empty()) throw std::invalid_argument("a scheme needs at least the diagonal relation");
  n_ = relations_[0].size();
  if (n_ > max_points) throw std::invalid_argument("dense scheme limited to 4096 points");
  for (const auto& rel : relations_) {
    if (rel.size() != n_) throw std::invalid_argument("relation matrices of different sizes");
    for (const auto& row : rel)
      if (row.size() != n_) throw std::invalid_argument("relation matrix is not square");
  }
}

std::size_t DenseScheme::relation_of(std::size_t x, std::size_t y) const {
  for (std::size_t i = 0; i < relations_.size(); ++i)
    if (relations_[i][x].test(y)) return i;
  return static_cast<std::size_t>(-1);
}

DenseScheme dense_materialize(const TranslationScheme& s) {
  const FieldTable& f = s.frame().field();
  const std::size_t n = f.order();
  if (n > DenseScheme::max_points) throw std::invalid_argument("dense materialization limited to q <= 4096");
  std::vector<std::size_t> label(n);
  for (std::size_t z = 0; z < n; ++z) label[z] = s.relation_of_difference(static_cast<FieldTable::Element>(z));

  const std::size_t d = s.relations();
  std::vector<std::vector<DynamicBitset>> rel(d + 1, std::vector<DynamicBitset>(n, DynamicBitset(n)));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      rel[label[f.sub(static_cast<FieldTable::Element>(x), static_cast<FieldTable::Element>(y))]][x].set(y);
  return DenseScheme(std::move(rel), true);
}

namespace {

DenseVerification fail(std::string msg, std::size_t x, std::size_t y) {
  DenseVerification v;
  v.failure = std::move(msg);
  v.witness = std::make_pair(x, y);
  return v;
}

}  // namespace

DenseVerification verify_scheme_dense(const DenseScheme& ds) {
  const std::size_t n = ds.points();
  const std::size_t r = ds.classes() + 1;
  constexpr std::size_t none = static_cast<std::size_t>(-1);

  for (std::size_t x = 0; x < n; ++x) {
    if (ds.row(0, x).count() != 1 || !ds.row(0, x).test(x)) return fail("R_0 is not the identity", x, x);
    DynamicBitset cover(n);
    std::size_t total = 0;
    for (std::size_t i = 0; i < r; ++i) {
      cover |= ds.row(i, x);
      total += ds.row(i, x).count();
    }
    if (total != n || cover.count() != n) return fail("relations do not partition X x X", x, x);
  }
  for (std::size_t i = 1; i < r; ++i)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y : ds.row(i, x).ones())
        if (!ds.row(i, y).test(x)) return fail("relation " + std::to_string(i) + " is not symmetric", x, y);

  DenseVerification out;
  out.p.assign(r, std::vector<std::vector<std::int64_t>>(r, std::vector<std::int64_t>(r, -1)));
  const std::size_t x_end = ds.translation_invariant() ? std::min<std::size_t>(1, n) : n;
  for (std::size_t x = 0; x < x_end; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t k = ds.relation_of(x, y);
      if (k == none) return fail("pair in no relation", x, y);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          // z with (x, z) in R_i and (z, y) in R_j; R_j symmetric
          const auto c = static_cast<std::int64_t>(ds.row(i, x).intersection_count(ds.row(j, y)));
          auto& slot = out.p[i][j][k];
          if (slot < 0) {
            slot = c;
          } else if (slot != c) {
            std::ostringstream os;
            os << "p_{" << i << ',' << j << "}^" << k << " not constant: " << slot << " vs " << c;
            return fail(os.str(), x, y);
          }
        }
      }
    }
  }
  for (auto& a : out.p)
    for (auto& b : a)
      for (auto& c : b)
        if (c < 0) c = 0;
  out.ok = true;
  return out;
}

DenseSrgCheck dense_srg_check(const DenseScheme& ds, std::size_t relation) {
  DenseSrgCheck out;
  const std::size_t n = ds.points();
  if (relation == 0 || relation > ds.classes()) throw std::out_of_range("relation index out of range");
  const auto k = static_cast<std::int64_t>(ds.row(relation, 0).count());
  for (std::size_t x = 0; x < n; ++x)
    if (static_cast<std::int64_t>(ds.row(relation, x).count()) != k) {
      out.failure = "not regular at vertex " + std::to_string(x);
      return out;
    }

  struct Partial {
    std::int64_t lambda = -1;
    std::int64_t mu = -1;
    std::string failure;
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(worker_count(), static_cast<unsigned>(n)));
  std::vector<Partial> parts(workers);
  // Row x pairs with y >= x only, so interleave rows to balance the triangle.
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        Partial& part = parts[w];
        for (std::size_t x = w; x < n && part.failure.empty(); x += workers) {
          const DynamicBitset& ax = ds.row(relation, x);
          for (std::size_t y = x; y < n; ++y) {
            const auto c = static_cast<std::int64_t>(ax.intersection_count(ds.row(relation, y)));
            std::int64_t* slot = nullptr;
            if (y == x) {
              if (c != k) part.failure = "diagonal of A^2 differs from k";
              continue;
            }
            slot = ax.test(y) ? &part.lambda : &part.mu;
            if (*slot < 0) {
              *slot = c;
            } else if (*slot != c) {
              std::ostringstream os;
              os << (ax.test(y) ? "lambda" : "mu") << " not constant at (" << x << ", " << y << ")";
              part.failure = os.str();
              break;
            }
          }
        }
      });
    }
  }
  std::int64_t lambda = -1;
  std::int64_t mu = -1;
  for (const Partial& part : parts) {
    if (!part.failure.empty()) {
      out.failure = part.failure;
      return out;
    }
    for (auto [mine, theirs] : {std::pair{&lambda, part.lambda}, std::pair{&mu, part.mu}}) {
      if (theirs < 0) continue;
      if (*mine < 0) {
        *mine = theirs;
      } else if (*mine != theirs) {
        out.failure = "A^2 coefficients differ between row blocks";
        return out;
      }
    }
  }
  if (lambda < 0 || mu < 0) {
    out.failure = "complete or empty graph";
    return out;
  }
  out.strongly_regular = true;
  out.parameters = {static_cast<std::int64_t>(n), k, lambda, mu};
  return out;
}

}  // namespace scheme_forge
