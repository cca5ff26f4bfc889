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

#include "scheme_forge/projective.hpp"

#include <algorithm>
#include <set>

#include "scheme_forge/common.hpp"

namespace scheme_forge {

namespace {

std::int64_t ipow(std::int64_t b, std::uint32_t e) {
  std::int64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r = checked_mul(r, b);
  return r;
}

ProjectiveSpace::Point normalize(const FieldTable& f, ProjectiveSpace::Point v) {
  const auto lead = std::find_if(v.begin(), v.end(), [](auto c) { return c != 0; });
  if (lead == v.end()) throw std::invalid_argument("zero vector has no projective point");
  const auto inv = f.inv(*lead);
  for (auto& c : v) c = f.mul(c, inv);
  return v;
}

}  // namespace

DesignParameters ProjectiveSpace::expected_parameters(std::uint32_t m, std::uint32_t q) {
  const std::int64_t qq = q;
  return {(ipow(qq, m + 1) - 1) / (qq - 1), (ipow(qq, m) - 1) / (qq - 1), (ipow(qq, m - 1) - 1) / (qq - 1)};
}

std::size_t ProjectiveSpace::index_of(const Point& v) const {
  return index_.at(normalize(*field_, v));
}

std::vector<std::size_t> ProjectiveSpace::span(const std::vector<Point>& generators) const {
  const std::size_t g = generators.size();
  std::set<std::size_t> out;
  std::vector<FieldTable::Element> coef(g, 0);
  const std::uint64_t total = static_cast<std::uint64_t>(ipow(q_, static_cast<std::uint32_t>(g)));
  for (std::uint64_t c = 0; c < total; ++c) {
    std::uint64_t v = c;
    for (std::size_t i = 0; i < g; ++i, v /= q_) coef[i] = static_cast<FieldTable::Element>(v % q_);
    Point acc(m_ + 1, 0);
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t t = 0; t <= m_; ++t) acc[t] = field_->add(acc[t], field_->mul(coef[i], generators[i][t]));
    if (std::any_of(acc.begin(), acc.end(), [](auto x) { return x != 0; })) out.insert(index_of(acc));
  }
  return {out.begin(), out.end()};
}

ProjectiveSpace pg_space(std::uint32_t m, std::uint32_t q) {
  if (m < 2 || m > 4) throw std::invalid_argument("PG(m, q) supported for 2 <= m <= 4");
  if (q < 2 || q > 16) throw std::invalid_argument("PG(m, q) supported for q <= 16");
  const auto factors = prime_factors(q);
  if (factors.size() != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  const auto p = static_cast<std::uint32_t>(factors[0]);
  std::uint32_t n = 0;
  for (std::uint32_t v = q; v > 1; v /= p) ++n;
  const DesignParameters expected = ProjectiveSpace::expected_parameters(m, q);
  if (expected.d > static_cast<std::int64_t>(ProjectiveSpace::max_points))
    throw std::invalid_argument("PG(" + std::to_string(m) + ", " + std::to_string(q) + ") has too many points");

  auto field = FieldTable::build(p, n);
  std::vector<ProjectiveSpace::Point> points;
  const std::uint64_t total = static_cast<std::uint64_t>(ipow(q, m + 1));
  for (std::uint64_t c = 1; c < total; ++c) {
    // coordinate 0 most significant: lexicographic order
    ProjectiveSpace::Point v(m + 1);
    std::uint64_t x = c;
    for (std::size_t t = m + 1; t-- > 0; x /= q) v[t] = static_cast<FieldTable::Element>(x % q);
    const auto lead = std::find_if(v.begin(), v.end(), [](auto e) { return e != 0; });
    if (*lead == 1) points.push_back(std::move(v));
  }

  const std::size_t d = points.size();
  Incidence inc(d);
  for (std::size_t h = 0; h < d; ++h)
    for (std::size_t x = 0; x < d; ++x) {
      FieldTable::Element dot = 0;
      for (std::size_t t = 0; t <= m; ++t) dot = field->add(dot, field->mul(points[h][t], points[x][t]));
      if (dot == 0) inc.set(h, x);
    }
  SymmetricDesign design(std::move(inc));
  if (design.parameters() != expected) throw Error("PG incidence has unexpected parameters");

  ProjectiveSpace space(m, q, field, points, std::move(design));
  for (std::size_t i = 0; i < d; ++i) space.index_.emplace(space.points_[i], i);

  std::vector<DynamicBitset> covered(d, DynamicBitset(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      if (covered[i].test(j)) continue;
      auto line = space.span({space.points_[i], space.points_[j]});
      for (std::size_t a : line)
        for (std::size_t b : line) covered[a].set(b);
      space.lines_.push_back(std::move(line));
    }
  return space;
}

void verify_spread(const ProjectiveSpace& space, const Spread& spread) {
  if (space.dimension() != 3) throw Error("spreads are defined in PG(3, q)");
  const std::size_t q = space.order();
  if (spread.lines.size() != q * q + 1) throw Error("a spread of PG(3, q) has q^2 + 1 lines");
  std::set<std::vector<std::size_t>> all_lines(space.lines().begin(), space.lines().end());
  std::vector<int> hits(space.point_count(), 0);
  for (const auto& line : spread.lines) {
    std::vector<std::size_t> sorted = line;
    std::sort(sorted.begin(), sorted.end());
    if (!all_lines.count(sorted)) throw Error("spread element is not a line");
    for (std::size_t x : line) ++hits[x];
  }
  for (std::size_t x = 0; x < hits.size(); ++x)
    if (hits[x] != 1) throw Error("point " + std::to_string(x) + " covered " + std::to_string(hits[x]) + " times");
}

Spread regular_spread(const ProjectiveSpace& space) {
  if (space.dimension() != 3) throw std::invalid_argument("regular spread needs PG(3, q)");
  const FieldTable& f = space.field();
  const std::uint32_t q = space.order();

  // GF(q^2) = GF(q)[theta], theta^2 = c1 theta + c0 with no root in GF(q).
  std::optional<std::pair<FieldTable::Element, FieldTable::Element>> poly;
  for (FieldTable::Element c0 = 1; c0 < q && !poly; ++c0)
    for (FieldTable::Element c1 = 0; c1 < q && !poly; ++c1) {
      bool has_root = false;
      for (FieldTable::Element x = 0; x < q && !has_root; ++x)
        has_root = f.mul(x, x) == f.add(f.mul(c1, x), c0);
      if (!has_root) poly = std::make_pair(c0, c1);
    }
  if (!poly) throw std::logic_error("no irreducible quadratic over GF(q)");
  const auto [c0, c1] = *poly;

  Spread spread;
  for (FieldTable::Element tu = 0; tu < q; ++tu)
    for (FieldTable::Element tv = 0; tv < q; ++tv) {
      // GF(q^2)-span of (1, t): GF(q)-basis (1, t) and (theta, theta t).
      const ProjectiveSpace::Point a{1, 0, tu, tv};
      const ProjectiveSpace::Point b{0, 1, f.mul(tv, c0), f.add(tu, f.mul(tv, c1))};
      spread.lines.push_back(space.span({a, b}));
    }
  spread.lines.push_back(space.span({{0, 0, 1, 0}, {0, 0, 0, 1}}));
  verify_spread(space, spread);
  return spread;
}

}  // namespace scheme_forge
