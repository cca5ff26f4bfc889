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

#include "scheme_forge/fusion.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "scheme_forge/common.hpp"

namespace scheme_forge {

FusionPartition::FusionPartition(std::vector<std::vector<std::size_t>> parts, std::size_t d) : parts_(std::move(parts)) {
  if (parts_.empty() || parts_[0] != std::vector<std::size_t>{0})
    throw std::invalid_argument("the first part of a fusion partition must be {0}");
  std::vector<int> seen(d + 1, 0);
  for (const auto& part : parts_) {
    if (part.empty()) throw std::invalid_argument("empty part in fusion partition");
    for (std::size_t i : part) {
      if (i > d) throw std::invalid_argument("relation index " + std::to_string(i) + " out of range");
      if (seen[i]++) throw std::invalid_argument("relation " + std::to_string(i) + " in two parts");
    }
  }
  for (std::size_t i = 0; i <= d; ++i)
    if (!seen[i]) throw std::invalid_argument("relation " + std::to_string(i) + " not covered");
}

FusionPartition FusionPartition::from_nontrivial(std::vector<std::vector<std::size_t>> parts, std::size_t d) {
  parts.insert(parts.begin(), std::vector<std::size_t>{0});
  return FusionPartition(std::move(parts), d);
}

FusionPartition FusionPartition::singletons(std::size_t d) {
  std::vector<std::vector<std::size_t>> parts;
  for (std::size_t i = 0; i <= d; ++i) parts.push_back({i});
  return FusionPartition(std::move(parts), d);
}

namespace {

using Signature = std::vector<std::int64_t>;

Signature row_signature(const IntMatrix& p, std::size_t j, const std::vector<std::vector<std::size_t>>& parts) {
  Signature sig(parts.size(), 0);
  for (std::size_t l = 0; l < parts.size(); ++l)
    for (std::size_t i : parts[l]) sig[l] = checked_add(sig[l], p(j, i));
  return sig;
}

// Quick form of the criterion for partition enumeration: distinct row
// signatures must number exactly |parts| with row 0 alone.
bool criterion_holds(const IntMatrix& p, const std::vector<std::vector<std::size_t>>& parts,
                     std::vector<Signature>& scratch) {
  scratch.resize(p.rows());
  for (std::size_t j = 0; j < p.rows(); ++j) scratch[j] = row_signature(p, j, parts);
  const Signature first = scratch[0];
  for (std::size_t j = 1; j < p.rows(); ++j)
    if (scratch[j] == first) return false;
  std::sort(scratch.begin(), scratch.end());
  const auto distinct = static_cast<std::size_t>(std::unique(scratch.begin(), scratch.end()) - scratch.begin());
  return distinct == parts.size();
}

void require_equal(const IntMatrix& got, const IntMatrix& want, const std::string& what) {
  if (canonical_row_order(got) != canonical_row_order(want))
    throw std::logic_error(what + " does not match its closed form:\n" + to_string(got) + "expected\n" +
                           to_string(want));
}

}  // namespace

FusionResult bannai_muzychuk(const Eigenmatrix& p, const FusionPartition& part) {
  FusionResult out;
  const IntMatrix& e = p.entries();
  const auto& parts = part.parts();
  for (const auto& lam : parts)
    for (std::size_t i : lam)
      if (i > p.classes()) throw std::invalid_argument("partition refers to a relation outside the eigenmatrix");

  std::map<Signature, std::size_t> index;
  std::vector<Signature> reps;
  for (std::size_t j = 0; j < e.rows(); ++j) {
    Signature sig = row_signature(e, j, parts);
    auto [it, inserted] = index.emplace(sig, reps.size());
    if (inserted) {
      reps.push_back(std::move(sig));
      out.row_classes.emplace_back();
    }
    out.row_classes[it->second].push_back(j);
  }
  if (out.row_classes[0].size() != 1) {
    out.diagnostic = "row 0 shares its block row sums with row " + std::to_string(out.row_classes[0][1]);
    return out;
  }
  if (reps.size() != parts.size()) {
    std::ostringstream os;
    os << "not a fusion scheme: " << reps.size() << " distinct block row-sum signatures for " << parts.size()
       << " parts";
    out.diagnostic = os.str();
    return out;
  }
  try {
    Eigenmatrix fused(IntMatrix::from_rows(reps));
    for (std::size_t i = 0; i < out.row_classes.size(); ++i) {
      std::int64_t m = 0;
      for (std::size_t j : out.row_classes[i]) m += p.multiplicities()[j];
      if (m != fused.multiplicities()[i]) {
        out.diagnostic = "fused multiplicity of row " + std::to_string(i) + " differs from the merged eigenspaces";
        return out;
      }
    }
    out.fused = std::move(fused);
  } catch (const Error& ex) {
    out.diagnostic = std::string("fused matrix is not an eigenmatrix: ") + ex.what();
    return out;
  }
  out.ok = true;
  return out;
}

AmorphyResult is_amorphous(const Eigenmatrix& p) {
  const std::size_t d = p.classes();
  if (d > 12) throw std::invalid_argument("amorphy enumeration limited to 12 classes");
  AmorphyResult out;
  std::vector<std::size_t> rgs(d, 0);
  std::vector<std::size_t> prefix_max(d, 0);
  std::vector<Signature> scratch;
  std::vector<std::vector<std::size_t>> parts;
  while (true) {
    const std::size_t blocks = d ? prefix_max[d - 1] + 1 : 0;
    parts.assign(blocks + 1, {});
    parts[0] = {0};
    for (std::size_t i = 0; i < d; ++i) parts[rgs[i] + 1].push_back(i + 1);
    ++out.partitions_checked;
    if (!criterion_holds(p.entries(), parts, scratch)) {
      out.counterexample = std::vector<std::vector<std::size_t>>(parts.begin() + 1, parts.end());
      return out;
    }
    // next restricted growth string
    std::size_t i = d;
    while (i-- > 1) {
      if (rgs[i] <= prefix_max[i - 1]) break;
    }
    if (i == 0 || i >= d) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t t = i + 1; t < d; ++t) {
      rgs[t] = 0;
      prefix_max[t] = prefix_max[i];
    }
  }
  out.amorphous = true;
  return out;
}

IntMatrix block_fusion_class3_formula(std::int64_t f, std::int64_t k, std::int64_t lambda, std::int64_t d,
                                     std::int64_t r, std::int64_t s) {
  const std::int64_t tail = (k - lambda) * r + (d - 2 * k + lambda) * s;
  return IntMatrix{{1, f, (k - 1) * f, (d - k) * f},
                   {1, r, (k - 1) * r, (d - k) * s},
                   {1, r, (lambda - 1) * r + (k - lambda) * s, tail},
                   {1, s, lambda * r + (k - 1 - lambda) * s, tail}};
}

IntMatrix block_fusion_class2_formula(std::int64_t f, std::int64_t k, std::int64_t lambda, std::int64_t d,
                                     std::int64_t r, std::int64_t s) {
  return IntMatrix{{1, k * f, (d - k) * f},
                   {1, k * r, (d - k) * s},
                   {1, lambda * r + (k - lambda) * s, (k - lambda) * r + (d - 2 * k + lambda) * s}};
}

BlockFusion design_block_fusion(const Theorem1Decomposition& t, std::size_t block) {
  const auto& design = t.design;
  if (block >= static_cast<std::size_t>(design.points())) throw std::out_of_range("block index out of range");
  const std::size_t d = static_cast<std::size_t>(design.points());
  const auto on_block = design.incidence().block(block).ones();
  std::vector<std::size_t> rest_of_block;
  std::vector<std::size_t> off_block;
  for (std::size_t x = 0; x < d; ++x) {
    if (x == on_block.front()) continue;
    (design.incidence()(block, x) ? rest_of_block : off_block).push_back(x + 1);
  }
  FusionPartition part3 = FusionPartition::from_nontrivial({{on_block.front() + 1}, rest_of_block, off_block}, d);
  FusionResult r3 = bannai_muzychuk(t.source, part3);
  if (!r3.ok) throw std::logic_error("block fusion failed the criterion: " + r3.diagnostic);

  const auto& p = design.parameters();
  require_equal(r3.fused->entries(),
                block_fusion_class3_formula(t.valency, p.k, p.lambda, p.d, t.marked, t.unmarked), "class-3 block fusion");

  FusionResult r2 = bannai_muzychuk(*r3.fused, FusionPartition::from_nontrivial({{1, 2}, {3}}, 3));
  if (!r2.ok) throw std::logic_error("merging the first two relations failed: " + r2.diagnostic);
  require_equal(r2.fused->entries(),
                block_fusion_class2_formula(t.valency, p.k, p.lambda, p.d, t.marked, t.unmarked), "class-2 block fusion");
  return BlockFusion{std::move(part3), std::move(*r3.fused), std::move(*r2.fused)};
}

PgAlignment align_to_pg(const Theorem1Decomposition& t, const ProjectiveSpace& space) {
  auto iso = design_isomorphic(t.design, space.design());
  if (!iso) throw Error("extracted design is not isomorphic to PG(" + std::to_string(space.dimension()) + ", " +
                        std::to_string(space.order()) + ")");
  const std::size_t d = iso->point_map.size();
  PgAlignment a;
  a.point_of_relation = iso->point_map;
  a.relation_of_point.assign(d, 0);
  for (std::size_t i = 0; i < d; ++i) a.relation_of_point[iso->point_map[i]] = i + 1;
  const Incidence& pg = space.design().incidence();
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) {
      const std::int64_t want = pg(iso->block_map[j], iso->point_map[i]) ? t.marked : t.unmarked;
      if (t.principal(j, i) != want) throw Error("principal part is not rM + s(J - M) for the aligned PG incidence");
    }
  return a;
}

IntMatrix line_fusion_formula(std::int64_t f, std::int64_t d, std::int64_t k, std::int64_t q, std::int64_t r,
                              std::int64_t s) {
  const auto n = static_cast<std::size_t>(q + 3);
  IntMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m(j, 0) = 1;
  m(0, 1) = (d - q - 1) * f;
  m(1, 1) = (k - q - 1) * r + (d - k) * s;
  for (std::size_t i = 2; i < n; ++i) {
    m(0, i) = f;
    m(1, i) = r;
  }
  for (std::size_t j = 2; j < n; ++j) {
    m(j, 1) = (k - 1) * r + (d - k - q) * s;
    for (std::size_t i = 2; i < n; ++i) m(j, i) = (i == j ? r - s : 0) + s;
  }
  return m;
}

IntMatrix spread_fusion_formula(std::int64_t f, std::int64_t q, std::int64_t r, std::int64_t s) {
  const auto n = static_cast<std::size_t>(q * q + 2);
  IntMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m(j, 0) = 1;
  for (std::size_t i = 1; i < n; ++i) m(0, i) = (q + 1) * f;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 1; i < n; ++i) m(j, i) = (i == j ? q * (r - s) : 0) + (r + s * q);
  return m;
}

GeometricFusion line_fusion(const Theorem1Decomposition& t, const ProjectiveSpace& space, const PgAlignment& align,
                            std::size_t line) {
  const auto& lines = space.lines();
  if (line >= lines.size()) throw std::out_of_range("line index out of range");
  const std::size_t d = space.point_count();
  std::vector<bool> on(d + 1, false);
  std::vector<std::vector<std::size_t>> parts{{}};
  for (std::size_t x : lines[line]) {
    const std::size_t rel = align.relation_of_point[x];
    on[rel] = true;
    parts.push_back({rel});
  }
  for (std::size_t rel = 1; rel <= d; ++rel)
    if (!on[rel]) parts[0].push_back(rel);
  FusionPartition part = FusionPartition::from_nontrivial(std::move(parts), d);
  FusionResult r = bannai_muzychuk(t.source, part);
  if (!r.ok) throw std::logic_error("line fusion failed the criterion: " + r.diagnostic);
  const auto params = space.design().parameters();
  require_equal(r.fused->entries(),
                line_fusion_formula(t.valency, params.d, params.k, space.order(), t.marked, t.unmarked), "line fusion");
  return GeometricFusion{std::move(part), std::move(*r.fused)};
}

GeometricFusion line_fusion(const Eigenmatrix& p, const ProjectiveSpace& space, std::size_t line) {
  const Theorem1Decomposition t = extract_design(p);
  return line_fusion(t, space, align_to_pg(t, space), line);
}

GeometricFusion spread_fusion(const Theorem1Decomposition& t, const ProjectiveSpace& space, const PgAlignment& align,
                              const Spread& spread) {
  verify_spread(space, spread);
  const std::size_t d = space.point_count();
  std::vector<std::vector<std::size_t>> parts;
  for (const auto& l : spread.lines) {
    std::vector<std::size_t> rels;
    for (std::size_t x : l) rels.push_back(align.relation_of_point[x]);
    std::sort(rels.begin(), rels.end());
    parts.push_back(std::move(rels));
  }
  FusionPartition part = FusionPartition::from_nontrivial(std::move(parts), d);
  FusionResult r = bannai_muzychuk(t.source, part);
  if (!r.ok) throw std::logic_error("spread fusion failed the criterion: " + r.diagnostic);
  require_equal(r.fused->entries(), spread_fusion_formula(t.valency, space.order(), t.marked, t.unmarked),
                "spread fusion");
  return GeometricFusion{std::move(part), std::move(*r.fused)};
}

GeometricFusion spread_fusion(const Eigenmatrix& p, const ProjectiveSpace& space, const Spread& spread) {
  const Theorem1Decomposition t = extract_design(p);
  return spread_fusion(t, space, align_to_pg(t, space), spread);
}

}  // namespace scheme_forge
