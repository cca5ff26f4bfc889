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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracle.hpp"
#include "scheme_forge/common.hpp"
#include "scheme_forge/cyclotomy.hpp"
#include "scheme_forge/design.hpp"
#include "scheme_forge/projective.hpp"
#include "scheme_forge/translation_scheme.hpp"

namespace sf = scheme_forge;

namespace {

sf::Incidence develop(std::size_t d, const std::vector<std::size_t>& base) {
  sf::Incidence m(d);
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t x : base) m.set(b, (b + x) % d);
  return m;
}

sf::Incidence fano() { return develop(7, {0, 1, 3}); }

sf::Incidence identity(std::size_t d) {
  sf::Incidence m(d);
  for (std::size_t i = 0; i < d; ++i) m.set(i, i);
  return m;
}

// 2-(15,7,3) from the twin-prime difference set in Z/3 x Z/5.
sf::Incidence twin_prime_15() {
  auto chi3 = [](std::size_t a) { return a % 3 == 1 ? 1 : -1; };
  auto chi5 = [](std::size_t b) { return (b % 5 == 1 || b % 5 == 4) ? 1 : -1; };
  std::vector<std::size_t> base;
  for (std::size_t x = 0; x < 15; ++x) {
    const std::size_t a = x % 3, b = x % 5;
    if (b == 0 || (a != 0 && chi3(a) * chi5(b) == 1)) base.push_back(x);
  }
  return develop(15, base);
}

// Size of the intersection of all blocks through x and y, for every pair.
std::set<std::size_t> pair_closure_sizes(const sf::Incidence& m) {
  std::set<std::size_t> sizes;
  const std::size_t d = m.size();
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = x + 1; y < d; ++y) {
      sf::DynamicBitset acc(d);
      for (std::size_t i = 0; i < d; ++i) acc.set(i);
      for (std::size_t b = 0; b < d; ++b)
        if (m(b, x) && m(b, y)) acc &= m.block(b);
      sizes.insert(acc.count());
    }
  return sizes;
}

sf::Incidence shuffle(const sf::Incidence& m, std::uint64_t seed) {
  const std::size_t d = m.size();
  std::vector<std::size_t> pp(d), bp(d);
  std::iota(pp.begin(), pp.end(), 0);
  std::iota(bp.begin(), bp.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(pp.begin(), pp.end(), rng);
  std::shuffle(bp.begin(), bp.end(), rng);
  sf::Incidence out(d);
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t x = 0; x < d; ++x) out.set(bp[b], pp[x], m(b, x));
  return out;
}

void expect_witness(const sf::SymmetricDesign& a, const sf::SymmetricDesign& b, const sf::DesignIsomorphism& iso) {
  const std::size_t d = static_cast<std::size_t>(a.points());
  for (std::size_t blk = 0; blk < d; ++blk)
    for (std::size_t x = 0; x < d; ++x)
      ASSERT_EQ(b.incidence()(iso.block_map[blk], iso.point_map[x]), a.incidence()(blk, x));
}

TEST(VerifyDesign, SmallFamilies) {
  EXPECT_EQ(sf::verify_design(fano()), (sf::DesignParameters{7, 3, 1}));
  for (std::size_t d : {3, 4, 9}) {
    const sf::Incidence jm = identity(d).complement();
    EXPECT_EQ(sf::verify_design(jm), (sf::DesignParameters{static_cast<std::int64_t>(d), static_cast<std::int64_t>(d) - 1,
                                                          static_cast<std::int64_t>(d) - 2}));
  }
  EXPECT_THROW(sf::verify_design(identity(5)), sf::Error);
  EXPECT_EQ(sf::verify_design(develop(11, {1, 3, 4, 5, 9})), (sf::DesignParameters{11, 5, 2}));
  EXPECT_EQ(sf::verify_design(twin_prime_15()), (sf::DesignParameters{15, 7, 3}));
}

TEST(VerifyDesign, RejectsBrokenIncidence) {
  sf::Incidence m = fano();
  m.set(0, 6);
  EXPECT_THROW(sf::verify_design(m), sf::Error);
  // regular but not balanced: the 7-cycle's closed neighbourhoods
  EXPECT_THROW(sf::verify_design(develop(7, {0, 1, 6})), sf::Error);
  EXPECT_THROW(sf::Incidence::from_matrix(sf::IntMatrix{{1, 2}, {0, 1}}), sf::Error);
}

TEST(ComplementDesign, Parameters) {
  EXPECT_EQ(sf::complement_design(sf::SymmetricDesign(fano())).parameters(), (sf::DesignParameters{7, 4, 2}));
  const sf::SymmetricDesign pg = sf::pg_space(3, 2).design();
  EXPECT_EQ(sf::complement_design(pg).parameters(), (sf::DesignParameters{15, 8, 4}));
  EXPECT_THROW(sf::complement_design(sf::SymmetricDesign(identity(6).complement())), sf::Error);
}

TEST(Incidence, TransposeAndComplementInvolutions) {
  const sf::Incidence m = develop(11, {1, 3, 4, 5, 9});
  EXPECT_EQ(m.transpose().transpose(), m);
  EXPECT_EQ(m.complement().complement(), m);
  EXPECT_EQ(m.transpose()(3, 5), m(5, 3));
}

TEST(IsCirculant, Basics) {
  EXPECT_TRUE(sf::is_circulant(identity(6).complement()));
  EXPECT_TRUE(sf::is_circulant(fano()));
  EXPECT_FALSE(sf::is_circulant(sf::pg_space(3, 2).design().incidence()));
  const sf::Incidence shuffled = shuffle(fano(), 3);
  const auto order = sf::circulant_row_order(shuffled);
  // shuffling points too breaks cyclicity unless it happens to be a rotation
  if (order) {
    EXPECT_TRUE(sf::is_circulant(sf::permute_rows(shuffled, *order)));
  }
  // row-only shuffles are always recoverable
  sf::Incidence rows_only(7);
  const std::vector<std::size_t> perm{3, 0, 6, 1, 5, 2, 4};
  for (std::size_t b = 0; b < 7; ++b)
    for (std::size_t x = 0; x < 7; ++x) rows_only.set(perm[b], x, fano()(b, x));
  const auto o2 = sf::circulant_row_order(rows_only);
  ASSERT_TRUE(o2.has_value());
  EXPECT_TRUE(sf::is_circulant(sf::permute_rows(rows_only, *o2)));
}

TEST(DesignIsomorphic, ShuffledCopies) {
  for (const sf::Incidence& m : {fano(), develop(11, {1, 3, 4, 5, 9}), sf::pg_space(3, 2).design().incidence(),
                                 develop(13, {0, 1, 3, 9})}) {
    const sf::SymmetricDesign a(m);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const sf::SymmetricDesign b(shuffle(m, seed));
      const auto iso = sf::design_isomorphic(a, b);
      ASSERT_TRUE(iso.has_value());
      expect_witness(a, b, *iso);
    }
  }
}

// Rank over GF(2), by elimination on row bitmasks.
std::size_t rank_gf2(const sf::Incidence& m) {
  std::vector<std::uint64_t> rows;
  for (std::size_t b = 0; b < m.size(); ++b) {
    std::uint64_t r = 0;
    for (std::size_t x = 0; x < m.size(); ++x) r |= std::uint64_t{m(b, x)} << x;
    rows.push_back(r);
  }
  std::size_t rank = 0;
  for (std::size_t bit = 0; bit < m.size(); ++bit) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](std::uint64_t r) { return r >> bit & 1; });
    if (pivot == rows.end()) continue;
    std::swap(*pivot, rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && (rows[i] >> bit & 1)) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank;
}

// Biplanes of order 4 developed from difference sets in Z2^4 and Z8 x Z2.
sf::Incidence biplane_elementary() {
  sf::Incidence inc(16);
  for (std::size_t b = 0; b < 16; ++b)
    for (std::size_t x : {0, 1, 2, 4, 8, 15}) inc.set(b, b ^ x);
  return inc;
}

sf::Incidence biplane_z8z2() {
  const std::vector<std::pair<std::size_t, std::size_t>> base{{0, 0}, {0, 1}, {1, 0}, {2, 0}, {5, 1}, {6, 0}};
  sf::Incidence inc(16);
  for (std::size_t b = 0; b < 16; ++b)
    for (auto [u, v] : base) inc.set(b, ((b / 2 + u) % 8) * 2 + (b % 2 + v) % 2);
  return inc;
}

TEST(DesignIsomorphic, TwinPrimeSetDevelopsToPg32) {
  const sf::SymmetricDesign pg = sf::pg_space(3, 2).design();
  const sf::SymmetricDesign twin(twin_prime_15());
  EXPECT_EQ(pair_closure_sizes(twin.incidence()), (std::set<std::size_t>{3}));
  const auto iso = sf::design_isomorphic(pg, twin);
  ASSERT_TRUE(iso.has_value());
  expect_witness(pg, twin, *iso);
}

TEST(DesignIsomorphic, NonIsomorphicDesigns) {
  const sf::SymmetricDesign a(biplane_elementary());
  const sf::SymmetricDesign b(biplane_z8z2());
  EXPECT_EQ(a.parameters(), (sf::DesignParameters{16, 6, 2}));
  EXPECT_EQ(b.parameters(), (sf::DesignParameters{16, 6, 2}));
  ASSERT_EQ(rank_gf2(a.incidence()), 6u);
  ASSERT_EQ(rank_gf2(b.incidence()), 7u);
  EXPECT_FALSE(sf::design_isomorphic(a, b).has_value());
  EXPECT_TRUE(sf::design_isomorphic(b, sf::SymmetricDesign(shuffle(b.incidence(), 5))).has_value());
  const sf::SymmetricDesign pg = sf::pg_space(3, 2).design();
  EXPECT_FALSE(sf::design_isomorphic(pg, sf::complement_design(pg)).has_value());
  EXPECT_FALSE(sf::design_isomorphic(sf::SymmetricDesign(fano()), pg).has_value());
}

TEST(ExtractDesign, PublishedSchemes) {
  struct Case {
    std::uint32_t p, m, e, step, count, stride;
    sf::DesignParameters want;
    std::int64_t marked;
  };
  for (const Case& c : {Case{2, 12, 45, 3, 3, 5, {15, 7, 3}, 17}, Case{2, 21, 49, 7, 7, 1, {7, 3, 1}, 585},
                        Case{3, 5, 11, 1, 1, 0, {11, 5, 2}, -5}}) {
    auto frame = sf::CyclotomicFrame::build(sf::FieldTable::build(c.p, c.m), c.e);
    const auto s = sf::TranslationScheme::cyclic_union(frame, c.step, c.count, c.stride, 1);
    const sf::Theorem1Decomposition t = sf::extract_design(sf::translation_eigenmatrix(s));
    EXPECT_EQ(t.design.parameters(), c.want);
    EXPECT_EQ(t.marked, c.marked);
    // the complement orientation is a design too; the smaller block size wins
    EXPECT_TRUE(t.both_orientations);
    EXPECT_LT(2 * t.design.block_size(), t.design.points());
    // P0 = marked M + unmarked (J - M)
    for (std::size_t j = 0; j < t.principal.rows(); ++j)
      for (std::size_t i = 0; i < t.principal.cols(); ++i)
        EXPECT_EQ(t.principal(j, i), t.design.incidence()(j, i) ? t.marked : t.unmarked);
  }
}

TEST(ExtractDesign, Example3IsTheFanoPlane) {
  auto frame = sf::CyclotomicFrame::build(sf::FieldTable::build(2, 21), 49);
  const auto t = sf::extract_design(
      sf::translation_eigenmatrix(sf::TranslationScheme::cyclic_union(frame, 7, 7, 1, 1)));
  EXPECT_TRUE(sf::design_isomorphic(t.design, sf::SymmetricDesign(fano())).has_value());
  EXPECT_TRUE(sf::circulant_row_order(t.design.incidence()).has_value());
}

TEST(ExtractDesign, AmorphousGivesCompleteDesign) {
  // GF(16), e = 5 is amorphous: P0 is rI + s(J - I) up to a column permutation
  auto frame = sf::CyclotomicFrame::build(sf::FieldTable::build(2, 4), 5);
  const sf::Theorem1Decomposition t = sf::extract_design(sf::cyclotomic_eigenmatrix(*frame));
  EXPECT_EQ(t.design.parameters(), (sf::DesignParameters{5, 4, 3}));
  EXPECT_FALSE(t.both_orientations);
  EXPECT_TRUE(sf::design_isomorphic(t.design, sf::SymmetricDesign(identity(5).complement())).has_value());
}

TEST(ExtractDesign, RejectsThreeValuedPrincipalPart) {
  auto frame = sf::CyclotomicFrame::build(sf::FieldTable::build(2, 6), 7);
  const sf::Eigenmatrix p = sf::cyclotomic_eigenmatrix(*frame);
  std::set<std::int64_t> values;
  for (std::size_t j = 1; j <= 7; ++j)
    for (std::size_t i = 1; i <= 7; ++i) values.insert(p(j, i));
  ASSERT_GT(values.size(), 2u);
  EXPECT_THROW(sf::extract_design(p), sf::Error);
}

TEST(Synthesize, FanoGivesGf8) {
  // k = -(s d + 1)/(r - s) with d = 7, k = 3 forces r - s = 2 for s = -1
  const sf::Eigenmatrix p = sf::synthesize_theorem1_eigenmatrix(sf::SymmetricDesign(fano()), 1, -1);
  EXPECT_EQ(p.point_count(), 8);
  auto frame = sf::CyclotomicFrame::build(sf::FieldTable::build(2, 3), 7);
  EXPECT_EQ(sf::canonical_row_order(p.entries()).row(0), sf::cyclotomic_eigenmatrix(*frame).entries().row(0));
  EXPECT_THROW(sf::synthesize_theorem1_eigenmatrix(sf::SymmetricDesign(fano()), 2, -1), sf::Error);
}

}  // namespace
