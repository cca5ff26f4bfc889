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

#include <set>

#include "scheme_forge/common.hpp"
#include "scheme_forge/projective.hpp"

namespace sf = scheme_forge;

namespace {

TEST(PgSpace, Parameters) {
  struct Case {
    std::uint32_t m, q;
    sf::DesignParameters want;
    std::size_t lines;
  };
  for (const Case& c : {Case{2, 2, {7, 3, 1}, 7}, Case{3, 2, {15, 7, 3}, 35}, Case{3, 3, {40, 13, 4}, 130},
                        Case{2, 4, {21, 5, 1}, 21}, Case{2, 3, {13, 4, 1}, 13}, Case{4, 2, {31, 15, 7}, 155},
                        Case{2, 9, {91, 10, 1}, 91}}) {
    const sf::ProjectiveSpace s = sf::pg_space(c.m, c.q);
    EXPECT_EQ(s.design().parameters(), c.want);
    EXPECT_EQ(sf::ProjectiveSpace::expected_parameters(c.m, c.q), c.want);
    EXPECT_EQ(s.point_count(), static_cast<std::size_t>(c.want.d));
    EXPECT_EQ(s.lines().size(), c.lines);
    for (const auto& l : s.lines()) EXPECT_EQ(l.size(), c.q + 1);
  }
}

TEST(PgSpace, PointsAreNormalizedAndOrdered) {
  const sf::ProjectiveSpace s = sf::pg_space(3, 3);
  for (std::size_t i = 0; i < s.point_count(); ++i) {
    const auto& v = s.point(i);
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    EXPECT_EQ(v[lead], 1u);
    EXPECT_EQ(s.index_of(v), i);
    // scalar multiples map to the same point
    EXPECT_EQ(s.index_of({v[0] * 2 % 3, v[1] * 2 % 3, v[2] * 2 % 3, v[3] * 2 % 3}), i);
    if (i > 0) {
      EXPECT_LT(s.point(i - 1), v);
    }
  }
  EXPECT_THROW(s.index_of({0, 0, 0, 0}), std::invalid_argument);
}

TEST(PgSpace, HyperplaneIsDualPoint) {
  const sf::ProjectiveSpace s = sf::pg_space(3, 2);
  for (std::size_t h = 0; h < s.point_count(); ++h)
    for (std::size_t x = 0; x < s.point_count(); ++x) {
      unsigned dot = 0;
      for (std::size_t c = 0; c < 4; ++c) dot ^= s.point(h)[c] & s.point(x)[c];
      EXPECT_EQ(s.design().incidence()(h, x), dot == 0);
    }
}

TEST(PgSpace, LinesAreIntersectionsOfHyperplanes) {
  const sf::ProjectiveSpace s = sf::pg_space(3, 3);
  const auto& inc = s.design().incidence();
  for (const auto& l : s.lines()) {
    // the hyperplanes through a line meet exactly in it
    sf::DynamicBitset acc(s.point_count());
    for (std::size_t i = 0; i < s.point_count(); ++i) acc.set(i);
    for (std::size_t h = 0; h < s.point_count(); ++h) {
      bool contains = true;
      for (std::size_t x : l) contains = contains && inc(h, x);
      if (contains) acc &= inc.block(h);
    }
    EXPECT_EQ(acc.ones(), l);
  }
  EXPECT_EQ(s.span({s.point(0), s.point(1)}).size(), 4u);
}

TEST(PgSpace, RejectsOutOfRange) {
  EXPECT_THROW(sf::pg_space(1, 2), std::invalid_argument);
  EXPECT_THROW(sf::pg_space(5, 2), std::invalid_argument);
  EXPECT_THROW(sf::pg_space(2, 6), std::invalid_argument);
  EXPECT_THROW(sf::pg_space(2, 17), std::invalid_argument);
  EXPECT_THROW(sf::pg_space(4, 16), std::invalid_argument);  // too many points
}

class RegularSpread : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(RegularSpread, PartitionsThePoints) {
  const std::uint32_t q = GetParam();
  const sf::ProjectiveSpace s = sf::pg_space(3, q);
  const sf::Spread spread = sf::regular_spread(s);
  EXPECT_EQ(spread.lines.size(), q * q + 1);
  std::set<std::size_t> covered;
  std::set<std::vector<std::size_t>> all_lines(s.lines().begin(), s.lines().end());
  for (const auto& l : spread.lines) {
    EXPECT_EQ(l.size(), q + 1);
    EXPECT_TRUE(all_lines.count(l)) << "not a line";
    for (std::size_t x : l) EXPECT_TRUE(covered.insert(x).second) << "point covered twice";
  }
  EXPECT_EQ(covered.size(), s.point_count());
  EXPECT_NO_THROW(sf::verify_spread(s, spread));
}

INSTANTIATE_TEST_SUITE_P(SmallOrders, RegularSpread, ::testing::Values(2u, 3u, 4u, 5u));

TEST(VerifySpread, RejectsOverlapAndNonLines) {
  const sf::ProjectiveSpace s = sf::pg_space(3, 2);
  sf::Spread bad = sf::regular_spread(s);
  bad.lines[1] = bad.lines[0];
  EXPECT_THROW(sf::verify_spread(s, bad), sf::Error);
  sf::Spread not_line = sf::regular_spread(s);
  std::swap(not_line.lines[0][0], not_line.lines[1][0]);
  EXPECT_THROW(sf::verify_spread(s, not_line), sf::Error);
  sf::Spread short_spread = sf::regular_spread(s);
  short_spread.lines.pop_back();
  EXPECT_THROW(sf::verify_spread(s, short_spread), sf::Error);
}

}  // namespace
