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

#include "scheme_forge/cyclotomy.hpp"

#include <sstream>

#include "scheme_forge/common.hpp"
#include "scheme_forge/eigenmatrix.hpp"

namespace scheme_forge {

std::optional<std::int64_t> CharacterSum::rational_value() const {
  if (counts.size() < 2) return counts.empty() ? std::nullopt : std::optional<std::int64_t>(counts[0]);
  for (std::size_t j = 2; j < counts.size(); ++j)
    if (counts[j] != counts[1]) return std::nullopt;
  // sum_{j>=1} zeta^j = -1
  return counts[0] - counts[1];
}

CharacterSum& CharacterSum::operator+=(const CharacterSum& other) {
  if (counts.empty()) counts.assign(other.counts.size(), 0);
  if (counts.size() != other.counts.size()) throw std::invalid_argument("character sums over different fields");
  for (std::size_t j = 0; j < counts.size(); ++j) counts[j] += other.counts[j];
  return *this;
}

std::shared_ptr<const CyclotomicFrame> CyclotomicFrame::build(FieldPtr field, std::uint32_t e) {
  const std::uint32_t n = field->order() - 1;
  if (e == 0 || n % e != 0)
    throw std::invalid_argument("e = " + std::to_string(e) + " does not divide q - 1 = " + std::to_string(n));
  const std::uint32_t p = field->characteristic();
  if (static_cast<std::uint64_t>(e) * p > (std::uint64_t{1} << 25))
    throw std::invalid_argument("e * p too large for per-class trace counts");

  auto frame = std::shared_ptr<CyclotomicFrame>(new CyclotomicFrame());
  frame->field_ = field;
  frame->e_ = e;
  frame->class_size_ = n / e;

  // Element alpha^t lies in class t mod e, so one pass over the power table
  // fills every class. Chunks accumulate privately and are merged in order.
  const auto powers = field->power_table();
  const auto traces = field->trace_table();
  const unsigned workers = std::max(1U, std::min<unsigned>(worker_count(), n / 65536 + 1));
  std::vector<std::vector<std::int64_t>> partial(workers);
  const std::size_t step = (n + workers - 1) / workers;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        auto& acc = partial[w];
        acc.assign(static_cast<std::size_t>(e) * p, 0);
        const std::size_t begin = std::min<std::size_t>(n, w * step);
        const std::size_t end = std::min<std::size_t>(n, begin + step);
        std::size_t cls = begin % e;
        for (std::size_t t = begin; t < end; ++t) {
          ++acc[cls * p + traces[powers[t]]];
          if (++cls == e) cls = 0;
        }
      });
    }
  }
  frame->counts_.assign(e, CharacterSum{std::vector<std::int64_t>(p, 0)});
  for (const auto& acc : partial)
    for (std::uint32_t i = 0; i < e; ++i)
      for (std::uint32_t j = 0; j < p; ++j) frame->counts_[i].counts[j] += acc[static_cast<std::size_t>(i) * p + j];
  frame->periods_.reserve(e);
  for (const auto& c : frame->counts_) frame->periods_.push_back(c.rational_value());
  return frame;
}

std::vector<FieldTable::Element> CyclotomicFrame::class_elements(std::uint32_t i) const {
  if (i >= e_) throw std::out_of_range("class index out of range");
  std::vector<FieldTable::Element> out;
  out.reserve(class_size_);
  const auto powers = field_->power_table();
  for (std::size_t t = i; t < powers.size(); t += e_) out.push_back(powers[t]);
  return out;
}

bool CyclotomicFrame::periods_rational() const {
  for (const auto& v : periods_)
    if (!v) return false;
  return true;
}

std::vector<std::int64_t> CyclotomicFrame::integral_periods() const {
  std::vector<std::int64_t> out;
  out.reserve(e_);
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (!periods_[i]) {
      std::ostringstream os;
      os << "Gaussian period eta_" << i << " is irrational; trace counts:";
      for (auto c : counts_[i].counts) os << ' ' << c;
      throw Error(os.str());
    }
    out.push_back(*periods_[i]);
  }
  return out;
}

bool CyclotomicFrame::symmetric() const {
  if (field_->characteristic() == 2) return true;
  // -1 = alpha^{(q-1)/2} lies in <alpha^e> iff e divides (q-1)/2.
  return ((field_->order() - 1) / 2) % e_ == 0;
}

Eigenmatrix cyclotomic_eigenmatrix(const CyclotomicFrame& frame) {
  const auto eta = frame.integral_periods();
  const std::uint32_t e = frame.classes();
  IntMatrix p(e + 1, e + 1);
  p(0, 0) = 1;
  for (std::uint32_t i = 0; i < e; ++i) p(0, i + 1) = frame.class_size();
  for (std::uint32_t j = 0; j < e; ++j) {
    p(j + 1, 0) = 1;
    for (std::uint32_t i = 0; i < e; ++i) p(j + 1, i + 1) = eta[(i + j) % e];
  }
  return Eigenmatrix(std::move(p));
}

bool amorphous_cyclotomic_predicate(std::uint32_t p, std::uint32_t m, std::uint32_t e) {
  if (m % 2 != 0) return false;
  const std::uint32_t half = m / 2;
  for (std::uint32_t mp = 1; mp <= half; ++mp) {
    if (half % mp != 0) continue;
    // p^{m'} + 1 mod e without overflow
    std::uint64_t r = 1 % e;
    for (std::uint32_t i = 0; i < mp; ++i) r = r * p % e;
    if ((r + 1) % e == 0) return true;
  }
  return false;
}

}  // namespace scheme_forge
