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

#ifndef SCHEME_FORGE_FINITE_FIELD_HPP
#define SCHEME_FORGE_FINITE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace scheme_forge {

/// Table-driven GF(p^m).
///
/// An element is the integer sum c_0 + c_1 p + ... + c_{m-1} p^{m-1}, standing
/// for the polynomial c_0 + c_1 X + ... + c_{m-1} X^{m-1} reduced modulo the
/// field's monic modulus. Index 0 is zero and index 1 is one. Multiplication
/// goes through the power/discrete-log tables of the primitive element alpha;
/// addition is digit-wise (XOR when p = 2).
///
/// The largest supported order is 2^22; at that size the three tables take
/// about 48 MB in total. A FieldTable is immutable once built.
class FieldTable {
 public:
  using Element = std::uint32_t;
  static constexpr std::uint64_t max_order = std::uint64_t{1} << 22;

  /// Builds GF(p^m). `modulus` holds c_0..c_m (low degree first, monic) or
  /// c_0..c_{m-1} with an implied leading 1. Without it, the lexicographically
  /// least monic irreducible of degree m is used, comparing c_0 first.
  /// Throws std::invalid_argument on a non-prime p, a reducible or malformed
  /// modulus, or an order above max_order.
  static std::shared_ptr<const FieldTable> build(std::uint32_t p, std::uint32_t m,
                                                 std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint32_t order() const { return q_; }
  /// Monic modulus, c_0..c_m.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Element alpha() const { return alpha_; }

  /// alpha^i for any integer i (reduced mod q-1).
  Element power(std::int64_t i) const;
  /// Discrete log base alpha in [0, q-2]; x must be nonzero.
  std::uint32_t dlog(Element x) const;
  /// Absolute trace to GF(p), as a residue in [0, p-1].
  std::uint32_t trace(Element x) const;

  std::span<const Element> power_table() const { return power_; }
  std::span<const std::uint32_t> dlog_table() const { return dlog_; }
  std::span<const std::uint32_t> trace_table() const { return trace_; }

  Element add(Element x, Element y) const;
  Element sub(Element x, Element y) const;
  Element neg(Element x) const;
  Element mul(Element x, Element y) const;
  Element inv(Element x) const;
  Element pow(Element x, std::uint64_t n) const;

  /// The element of GF(p) with value c (c < p), i.e. c * 1.
  Element scalar(std::uint32_t c) const { return c; }
  std::vector<std::uint32_t> coefficients(Element x) const;
  Element from_coefficients(std::span<const std::uint32_t> c) const;

  /// counts[j] = #{x in elements : Tr(x) = j}. The additive character sum
  /// over the set is sum_j counts[j] zeta_p^j.
  std::vector<std::int64_t> character_counts(std::span<const Element> elements) const;

  /// Monic irreducibility test over GF(p) (coefficients low degree first).
  static bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);
  static std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t m);
  /// Next irreducible after `after` in the same lexicographic order.
  static std::optional<std::vector<std::uint32_t>> next_irreducible(std::uint32_t p,
                                                                    std::span<const std::uint32_t> after);

 private:
  FieldTable() = default;
  void check_element(Element x) const;

  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Element alpha_ = 0;
  std::vector<Element> power_;
  std::vector<std::uint32_t> dlog_;
  std::vector<std::uint32_t> trace_;
};

using FieldPtr = std::shared_ptr<const FieldTable>;

}  // namespace scheme_forge

#endif  // SCHEME_FORGE_FINITE_FIELD_HPP
