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

#ifndef SCHEME_FORGE_BITSET_HPP
#define SCHEME_FORGE_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace scheme_forge {

/// Runtime-sized bitset used for 0/1 matrix rows. Bits past size() are kept
/// zero so popcounts over whole words stay exact.
class DynamicBitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t bits_per_word = 64;

  DynamicBitset() = default;
  explicit DynamicBitset(std::size_t n) : size_(n), words_((n + bits_per_word - 1) / bits_per_word, 0) {}

  std::size_t size() const { return size_; }

  void set(std::size_t i) { words_[i / bits_per_word] |= Word{1} << (i % bits_per_word); }
  void reset(std::size_t i) { words_[i / bits_per_word] &= ~(Word{1} << (i % bits_per_word)); }
  bool test(std::size_t i) const { return (words_[i / bits_per_word] >> (i % bits_per_word)) & 1U; }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// |this & other| without materializing the intersection.
  std::size_t intersection_count(const DynamicBitset& other) const {
    std::size_t c = 0;
    const std::size_t n = words_.size();
    for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }

  bool is_subset_of(const DynamicBitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  DynamicBitset& operator&=(const DynamicBitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  DynamicBitset& operator|=(const DynamicBitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  bool operator==(const DynamicBitset&) const = default;

  /// Indices of set bits in increasing order.
  std::vector<std::size_t> ones() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word x = words_[w];
      while (x) {
        out.push_back(w * bits_per_word + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
    return out;
  }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
      if (test(i)) s[i] = '1';
    return s;
  }

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace scheme_forge

#endif  // SCHEME_FORGE_BITSET_HPP
