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

#include "scheme_forge/translation_scheme.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "scheme_forge/common.hpp"

namespace scheme_forge {

TranslationScheme::TranslationScheme(FramePtr frame, std::vector<std::vector<std::uint32_t>> groups)
    : frame_(std::move(frame)), groups_(std::move(groups)) {
  const std::uint32_t e = frame_->classes();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  relation_of_class_.assign(e, unset);
  for (std::size_t j = 0; j < groups_.size(); ++j) {
    if (groups_[j].empty()) throw std::invalid_argument("empty relation group");
    for (std::uint32_t c : groups_[j]) {
      if (c >= e) throw std::invalid_argument("class index " + std::to_string(c) + " out of range");
      if (relation_of_class_[c] != unset)
        throw std::invalid_argument("class " + std::to_string(c) + " appears in two groups");
      relation_of_class_[c] = j + 1;
    }
  }
  for (std::uint32_t c = 0; c < e; ++c)
    if (relation_of_class_[c] == unset) throw std::invalid_argument("class " + std::to_string(c) + " not covered");
}

TranslationScheme TranslationScheme::cyclotomic(FramePtr frame) {
  std::vector<std::vector<std::uint32_t>> groups(frame->classes());
  for (std::uint32_t i = 0; i < frame->classes(); ++i) groups[i] = {i};
  return TranslationScheme(std::move(frame), std::move(groups));
}

TranslationScheme TranslationScheme::cyclic_union(FramePtr frame, std::uint32_t step, std::uint32_t count,
                                                  std::uint32_t stride, std::int64_t a) {
  const std::int64_t e = frame->classes();
  if (count == 0 || e % count != 0) throw std::invalid_argument("group size must divide e");
  const std::int64_t d = e / count;
  std::vector<std::vector<std::uint32_t>> groups(static_cast<std::size_t>(d));
  for (std::int64_t k = 1; k <= d; ++k) {
    for (std::int64_t i = 0; i < count; ++i) {
      std::int64_t c = (a % e) * ((step * (k - 1) + stride * i) % e) % e;
      if (c < 0) c += e;
      groups[static_cast<std::size_t>(k - 1)].push_back(static_cast<std::uint32_t>(c));
    }
  }
  return TranslationScheme(std::move(frame), std::move(groups));
}

std::size_t TranslationScheme::relation_of_difference(FieldTable::Element x) const {
  if (x == 0) return 0;
  return relation_of_class_[frame_->class_of(x)];
}

std::int64_t TranslationScheme::valency(std::size_t j) const {
  if (j == 0) return 1;
  return static_cast<std::int64_t>(group(j).size()) * frame_->class_size();
}

namespace {

// Character value of relation `rel` at character class j.
CharacterSum group_sum(const TranslationScheme& s, std::size_t rel, std::uint32_t j) {
  const std::uint32_t e = s.frame().classes();
  CharacterSum acc;
  for (std::uint32_t i : s.group(rel)) acc += s.frame().period_counts((i + j) % e);
  return acc;
}

std::int64_t rational_or_throw(const CharacterSum& c, std::size_t rel, std::uint32_t j) {
  if (auto v = c.rational_value()) return *v;
  std::ostringstream os;
  os << "character value of relation " << rel << " at class " << j << " is irrational; trace counts:";
  for (auto x : c.counts) os << ' ' << x;
  throw Error(os.str());
}

}  // namespace

Eigenmatrix translation_eigenmatrix(const TranslationScheme& s) {
  const std::size_t d = s.relations();
  const std::uint32_t e = s.frame().classes();
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::int64_t> valency_row(d + 1);
  for (std::size_t l = 0; l <= d; ++l) valency_row[l] = s.valency(l);
  rows.push_back(valency_row);
  std::map<std::vector<std::int64_t>, std::size_t> seen{{valency_row, 0}};
  for (std::uint32_t j = 0; j < e; ++j) {
    std::vector<std::int64_t> row(d + 1);
    row[0] = 1;
    for (std::size_t l = 1; l <= d; ++l) row[l] = rational_or_throw(group_sum(s, l, j), l, j);
    if (seen.emplace(row, rows.size()).second) rows.push_back(std::move(row));
  }
  if (rows.size() != d + 1) {
    std::ostringstream os;
    os << "not a fusion scheme: " << rows.size() << " distinct eigenvalue rows for " << d << " relations";
    throw Error(os.str());
  }
  return Eigenmatrix(IntMatrix::from_rows(rows));
}

std::string to_string(SrgStatus s) {
  switch (s) {
    case SrgStatus::strongly_regular:
      return "strongly_regular";
    case SrgStatus::degenerate:
      return "degenerate";
    case SrgStatus::not_strongly_regular:
      return "not_strongly_regular";
  }
  return "unknown";
}

SrgReport srg_check_translation(const TranslationScheme& s, std::size_t relation) {
  if (relation < 1 || relation > s.relations()) throw std::out_of_range("relation index out of range");
  const std::uint32_t e = s.frame().classes();
  std::map<std::int64_t, std::int64_t> hist;
  for (std::uint32_t j = 0; j < e; ++j) ++hist[rational_or_throw(group_sum(s, relation, j), relation, j)];

  SrgReport rep;
  rep.relation = relation;
  rep.n = s.frame().field().order();
  rep.k = s.valency(relation);
  for (const auto& [v, c] : hist) rep.values.push_back(v);
  const std::int64_t class_size = s.frame().class_size();
  if (hist.size() == 1) {
    rep.status = SrgStatus::degenerate;
    rep.r = rep.s = hist.begin()->first;
    rep.r_multiplicity = hist.begin()->second * class_size;
  } else if (hist.size() == 2) {
    rep.s = hist.begin()->first;
    rep.r = hist.rbegin()->first;
    rep.s_multiplicity = hist.begin()->second * class_size;
    rep.r_multiplicity = hist.rbegin()->second * class_size;
    const SrgParameters srg = srg_from_spectrum(rep.n, rep.k, rep.r, rep.s);
    rep.lambda = srg.lambda;
    rep.mu = srg.mu;
    rep.status = SrgStatus::strongly_regular;
  } else {
    rep.status = SrgStatus::not_strongly_regular;
  }
  return rep;
}

TranslationScheme parse_groups(FramePtr frame, const std::string& spec) {
  if (spec.empty() || spec == "singletons") return TranslationScheme::cyclotomic(std::move(frame));
  const std::string prefix = "cyclic:";
  if (spec.rfind(prefix, 0) == 0) {
    std::vector<std::int64_t> v;
    std::stringstream ss(spec.substr(prefix.size()));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        v.push_back(std::stoll(tok));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad integer '" + tok + "' in group spec");
      }
    }
    if (v.size() != 4 || v[0] < 0 || v[1] <= 0 || v[2] < 0)
      throw std::invalid_argument("cyclic group spec needs STEP,COUNT,STRIDE,a");
    return TranslationScheme::cyclic_union(std::move(frame), static_cast<std::uint32_t>(v[0]),
                                           static_cast<std::uint32_t>(v[1]), static_cast<std::uint32_t>(v[2]), v[3]);
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(spec);
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("group spec is neither cyclic:... nor JSON: ") + ex.what());
  }
  std::vector<std::vector<std::uint32_t>> groups;
  try {
    groups = j.get<std::vector<std::vector<std::uint32_t>>>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument("JSON group spec must be an array of arrays of class indices");
  }
  return TranslationScheme(std::move(frame), std::move(groups));
}

}  // namespace scheme_forge
