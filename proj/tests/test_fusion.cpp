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

#include "scheme_forge/common.hpp"
#include "scheme_forge/cyclotomy.hpp"
#include "scheme_forge/dense_scheme.hpp"
#include "scheme_forge/fusion.hpp"
#include "scheme_forge/translation_scheme.hpp"

namespace sf = scheme_forge;

namespace {

const sf::IntMatrix kIvanov4096{{1, 3276, 273, 273, 273},
                                {1, -52, 17, 17, 17},
                                {1, 12, -15, -15, 17},
                                {1, 12, -15, 17, -15},
                                {1, 12, 17, -15, -15}};

sf::FramePtr frame(std::uint32_t p, std::uint32_t m, std::uint32_t e) {
  return sf::CyclotomicFrame::build(sf::FieldTable::build(p, m), e);
}

sf::TranslationScheme example1() { return sf::TranslationScheme::cyclic_union(frame(2, 12, 45), 3, 3, 5, 1); }

// Classes of the fused translation scheme: relation parts mapped back to classes.
sf::TranslationScheme fused_scheme(const sf::TranslationScheme& s, const sf::FusionPartition& part) {
  std::vector<std::vector<std::uint32_t>> groups;
  for (std::size_t j = 1; j < part.parts().size(); ++j) {
    std::vector<std::uint32_t> g;
    for (std::size_t rel : part.parts()[j])
      for (std::uint32_t c : s.group(rel)) g.push_back(c);
    groups.push_back(g);
  }
  return sf::TranslationScheme(s.frame_ptr(), groups);
}

TEST(FusionPartition, Validation) {
  EXPECT_NO_THROW(sf::FusionPartition({{0}, {1, 2}, {3}}, 3));
  EXPECT_THROW(sf::FusionPartition({{0, 1}, {2, 3}}, 3), std::invalid_argument);
  EXPECT_THROW(sf::FusionPartition({{0}, {1, 2}}, 3), std::invalid_argument);
  EXPECT_THROW(sf::FusionPartition({{0}, {1, 2}, {2, 3}}, 3), std::invalid_argument);
  EXPECT_THROW(sf::FusionPartition({{0}, {1, 4}, {2, 3}}, 3), std::invalid_argument);
  EXPECT_THROW(sf::FusionPartition({{0}, {}, {1, 2, 3}}, 3), std::invalid_argument);
  EXPECT_EQ(sf::FusionPartition::singletons(3).fused_classes(), 3u);
}

TEST(BannaiMuzychuk, SingletonsLeavePUnchanged) {
  const sf::Eigenmatrix p(kIvanov4096);
  const sf::FusionResult r = sf::bannai_muzychuk(p, sf::FusionPartition::singletons(4));
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(*r.fused, p);
}

TEST(BannaiMuzychuk, FullFusionOfPseudocyclic) {
  const sf::Eigenmatrix p = sf::cyclotomic_eigenmatrix(*frame(3, 5, 11));
  std::vector<std::size_t> all;
  for (std::size_t i = 1; i <= 11; ++i) all.push_back(i);
  const sf::FusionResult r = sf::bannai_muzychuk(p, sf::FusionPartition::from_nontrivial({all}, 11));
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(r.fused->entries(), (sf::IntMatrix{{1, 242}, {1, -1}}));
}

TEST(BannaiMuzychuk, FailureHasDiagnostic) {
  const sf::Eigenmatrix p(kIvanov4096);
  const sf::FusionResult r = sf::bannai_muzychuk(p, sf::FusionPartition::from_nontrivial({{1, 2}, {3, 4}}, 4));
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.fused.has_value());
  EXPECT_FALSE(r.diagnostic.empty());
}

TEST(BannaiMuzychuk, FusionCommutesWithGrouping) {
  // grouping classes directly and fusing the cyclotomic eigenmatrix agree
  auto f = frame(2, 12, 45);
  const sf::Eigenmatrix cyc = sf::cyclotomic_eigenmatrix(*f);
  const sf::TranslationScheme s = example1();
  std::vector<std::vector<std::size_t>> parts;
  for (const auto& g : s.groups()) {
    std::vector<std::size_t> rels;
    for (auto c : g) rels.push_back(c + 1);
    std::sort(rels.begin(), rels.end());
    parts.push_back(rels);
  }
  const sf::FusionResult r = sf::bannai_muzychuk(cyc, sf::FusionPartition::from_nontrivial(parts, 45));
  ASSERT_TRUE(r.ok) << r.diagnostic;
  EXPECT_EQ(sf::canonical_row_order(r.fused->entries()), sf::canonical_row_order(sf::translation_eigenmatrix(s).entries()));
}

TEST(BannaiMuzychuk, AgreesWithDenseOracleOnRandomPartitions) {
  const sf::TranslationScheme s = sf::TranslationScheme::cyclotomic(frame(2, 6, 9));
  const sf::Eigenmatrix p = sf::translation_eigenmatrix(s);
  std::uint64_t state = 12345;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::vector<std::size_t>> parts(1 + trial % 4);
    for (std::size_t rel = 1; rel <= 9; ++rel) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      parts[(state >> 33) % parts.size()].push_back(rel);
    }
    std::erase_if(parts, [](const auto& v) { return v.empty(); });
    const sf::FusionPartition part = sf::FusionPartition::from_nontrivial(parts, 9);
    const bool dense_ok = sf::verify_scheme_dense(sf::dense_materialize(fused_scheme(s, part))).ok;
    EXPECT_EQ(sf::bannai_muzychuk(p, part).ok, dense_ok) << "trial " << trial;
  }
}

TEST(IsAmorphous, Basics) {
  EXPECT_TRUE(sf::is_amorphous(sf::Eigenmatrix(sf::IntMatrix{{1, 9}, {1, -1}})).amorphous);
  const sf::AmorphyResult ivanov = sf::is_amorphous(sf::Eigenmatrix(kIvanov4096));
  EXPECT_FALSE(ivanov.amorphous);
  EXPECT_TRUE(ivanov.counterexample.has_value());
  const sf::AmorphyResult gf16 = sf::is_amorphous(sf::cyclotomic_eigenmatrix(*frame(2, 4, 5)));
  EXPECT_TRUE(gf16.amorphous);
  EXPECT_EQ(gf16.partitions_checked, 52u);
  EXPECT_FALSE(sf::is_amorphous(sf::cyclotomic_eigenmatrix(*frame(2, 6, 7))).amorphous);
  EXPECT_THROW(sf::is_amorphous(sf::cyclotomic_eigenmatrix(*frame(2, 4, 15))), std::invalid_argument);
}

TEST(BlockFusion, PublishedParameterSets) {
  EXPECT_EQ(sf::block_fusion_class3_formula(273, 7, 3, 15, 17, -15),
            (sf::IntMatrix{{1, 273, 1638, 2184}, {1, 17, 102, -120}, {1, 17, -26, 8}, {1, -15, 6, 8}}));
  EXPECT_EQ(sf::block_fusion_class2_formula(273, 7, 3, 15, 17, -15),
            (sf::IntMatrix{{1, 1911, 2184}, {1, 119, -120}, {1, -9, 8}}));
}

TEST(BlockFusion, EveryBlockOfExample1) {
  const sf::TranslationScheme s = example1();
  const sf::Theorem1Decomposition t = sf::extract_design(sf::translation_eigenmatrix(s));
  const sf::IntMatrix want3 = sf::canonical_row_order(sf::block_fusion_class3_formula(273, 7, 3, 15, 17, -15));
  for (std::size_t b = 0; b < 15; ++b) {
    const sf::BlockFusion bf = sf::design_block_fusion(t, b);
    EXPECT_EQ(sf::canonical_row_order(bf.class3.entries()), want3);
    // the fused relations really form a scheme
    if (b < 2) {
      EXPECT_TRUE(sf::verify_scheme_dense(sf::dense_materialize(fused_scheme(s, bf.partition))).ok);
    }
    const sf::FusionResult merged =
        sf::bannai_muzychuk(bf.class3, sf::FusionPartition::from_nontrivial({{1, 2}, {3}}, 3));
    ASSERT_TRUE(merged.ok);
    EXPECT_EQ(merged.fused->entries(), bf.class2.entries());
  }
  EXPECT_THROW(sf::design_block_fusion(t, 15), std::out_of_range);
}

// The cyclotomic scheme of index (q^{m+1}-1)/(q-1) on GF(q^{m+1}) has periods
// q-1 and -1, and its design is PG(m, q).
struct PgCase {
  std::uint32_t p, h, m;  // q = p^h
};

class GeometricFusions : public ::testing::TestWithParam<PgCase> {};

TEST_P(GeometricFusions, LineAndSpreadFusionsAreSchemes) {
  const auto [p, h, m] = GetParam();
  std::uint32_t q = 1;
  for (std::uint32_t i = 0; i < h; ++i) q *= p;
  std::uint32_t qn = 1;
  for (std::uint32_t i = 0; i < h * (m + 1); ++i) qn *= p;
  const std::uint32_t e = (qn - 1) / (q - 1);
  const sf::TranslationScheme s = sf::TranslationScheme::cyclotomic(frame(p, h * (m + 1), e));
  const sf::Eigenmatrix pm = sf::translation_eigenmatrix(s);
  const sf::Theorem1Decomposition t = sf::extract_design(pm);
  EXPECT_EQ(t.design.parameters(), sf::ProjectiveSpace::expected_parameters(m, q));
  EXPECT_EQ(t.marked, static_cast<std::int64_t>(q) - 1);
  EXPECT_EQ(t.unmarked, -1);
  const sf::ProjectiveSpace pg = sf::pg_space(m, q);
  const sf::PgAlignment align = sf::align_to_pg(t, pg);
  const auto& dp = t.design.parameters();
  const sf::IntMatrix want_line =
      sf::canonical_row_order(sf::line_fusion_formula(t.valency, dp.d, dp.k, q, t.marked, t.unmarked));
  for (std::size_t line : {std::size_t{0}, pg.lines().size() - 1}) {
    const sf::GeometricFusion lf = sf::line_fusion(t, pg, align, line);
    EXPECT_EQ(lf.fused.classes(), q + 2);
    EXPECT_EQ(sf::canonical_row_order(lf.fused.entries()), want_line);
    const sf::TranslationScheme fs = fused_scheme(s, lf.partition);
    EXPECT_TRUE(sf::verify_scheme_dense(sf::dense_materialize(fs)).ok);
    EXPECT_EQ(sf::canonical_row_order(sf::translation_eigenmatrix(fs).entries()), want_line);
  }
  if (m == 3) {
    const sf::GeometricFusion sp = sf::spread_fusion(t, pg, align, sf::regular_spread(pg));
    EXPECT_EQ(sp.fused.classes(), q * q + 1);
    EXPECT_TRUE(sf::is_pseudocyclic(sp.fused));
    EXPECT_EQ(sf::canonical_row_order(sp.fused.entries()),
              sf::canonical_row_order(sf::spread_fusion_formula(t.valency, q, t.marked, t.unmarked)));
    EXPECT_TRUE(sf::verify_scheme_dense(sf::dense_materialize(fused_scheme(s, sp.partition))).ok);
    if (q * q + 1 <= 12) {
      EXPECT_TRUE(sf::is_amorphous(sp.fused).amorphous);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallGeometries, GeometricFusions,
                         ::testing::Values(PgCase{2, 1, 2}, PgCase{2, 1, 3}, PgCase{3, 1, 2}, PgCase{2, 2, 2},
                                           PgCase{3, 1, 3}, PgCase{5, 1, 2}));

TEST(LineFusion, FormulaAtPublishedParameters) {
  EXPECT_EQ(sf::canonical_row_order(sf::line_fusion_formula(273, 15, 7, 2, 17, -15)),
            sf::canonical_row_order(kIvanov4096));
  const sf::IntMatrix sp = sf::spread_fusion_formula(69905, 2, 273, -239);
  EXPECT_EQ(sp(0, 1), 209715);
  EXPECT_EQ(sp(1, 1), 819);
  EXPECT_EQ(sp(1, 2), -205);
  const sf::IntMatrix sp1 = sf::spread_fusion_formula(273, 2, 17, -15);
  EXPECT_EQ(sp1(1, 1), 51);
  EXPECT_EQ(sp1(2, 1), -13);
  EXPECT_EQ(sp1(0, 3), 819);
  // row sums of the principal part are -1
  for (std::size_t j = 1; j <= 5; ++j) {
    std::int64_t sum = 0;
    for (std::size_t i = 1; i <= 5; ++i) sum += sp1(j, i);
    EXPECT_EQ(sum, -1);
  }
}

TEST(LineFusion, RejectsMismatchedGeometry) {
  const sf::Theorem1Decomposition t = sf::extract_design(sf::translation_eigenmatrix(example1()));
  EXPECT_THROW(sf::align_to_pg(t, sf::pg_space(2, 2)), sf::Error);
}

}  // namespace
