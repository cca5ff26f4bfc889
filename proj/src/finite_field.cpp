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

#include "scheme_forge/finite_field.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "scheme_forge/common.hpp"

namespace scheme_forge {

unsigned worker_count() {
  if (const char* env = std::getenv("SCHEME_FORGE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

namespace {

// Dense polynomials over GF(p), low degree first, no trailing zeros (the zero
// polynomial is empty).
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = inv_mod(f.back(), p);
  while (a.size() > df) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) a[shift + i] = (a[shift + i] + p - c * f[i] % p) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly b, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly r{1};
  r = poly_mod(r, f, p);
  b = poly_mod(b, f, p);
  while (e) {
    if (e & 1U) r = poly_mulmod(r, b, f, p);
    b = poly_mulmod(b, b, f, p);
    e >>= 1U;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= b;
  return r;
}

// Multiplication used only while the tables are being built.
class SlowArithmetic {
 public:
  SlowArithmetic(std::uint32_t p, std::uint32_t m, const std::vector<std::uint32_t>& modulus)
      : p_(p), m_(m), modulus_(modulus) {
    if (p == 2) {
      for (std::uint32_t i = 0; i < m; ++i)
        if (modulus[i]) low_mask_ |= std::uint64_t{1} << i;
    }
  }

  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    if (p_ == 2) {
      std::uint64_t acc = 0;
      std::uint64_t a = x;
      for (std::uint32_t i = 0; i < m_; ++i) {
        if ((y >> i) & 1U) acc ^= a;
        a <<= 1U;
        if ((a >> m_) & 1U) a = (a ^ (std::uint64_t{1} << m_)) ^ low_mask_;
      }
      return static_cast<std::uint32_t>(acc);
    }
    Poly a = digits(x);
    Poly b = digits(y);
    Poly f(modulus_.begin(), modulus_.end());
    return undigits(poly_mulmod(a, b, f, p_));
  }

  std::uint32_t pow(std::uint32_t x, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1U) r = mul(r, x);
      x = mul(x, x);
      e >>= 1U;
    }
    return r;
  }

 private:
  Poly digits(std::uint32_t x) const {
    Poly d;
    while (x) {
      d.push_back(x % p_);
      x /= p_;
    }
    return d;
  }
  std::uint32_t undigits(const Poly& d) const {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
    return static_cast<std::uint32_t>(v);
  }

  std::uint32_t p_;
  std::uint32_t m_;
  std::vector<std::uint32_t> modulus_;
  std::uint64_t low_mask_ = 0;
};

// Lexicographic successor of the coefficient tuple (c_0, ..., c_{m-1}),
// c_0 most significant. Returns false on wrap-around.
bool advance(std::vector<std::uint32_t>& c, std::uint32_t p) {
  for (std::size_t i = c.size(); i-- > 0;) {
    if (++c[i] < p) return true;
    c[i] = 0;
  }
  return false;
}

}  // namespace

bool FieldTable::is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
  if (poly.size() < 2 || poly.back() != 1) return false;
  const std::size_t m = poly.size() - 1;
  for (std::uint32_t c : poly)
    if (c >= p) return false;
  if (m == 1) return true;
  if (poly[0] == 0) return false;
  const Poly f(poly.begin(), poly.end());
  // Ben-Or: f is irreducible iff gcd(x^{p^i} - x, f) = 1 for i = 1..m/2.
  Poly h{0, 1};
  for (std::size_t i = 1; i <= m / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Poly g = h;
    g.resize(std::max<std::size_t>(g.size(), 2), 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    if (g.empty()) return false;
    if (poly_gcd(f, g, p).size() > 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> FieldTable::least_irreducible(std::uint32_t p, std::uint32_t m) {
  std::vector<std::uint32_t> low(m, 0);
  do {
    std::vector<std::uint32_t> f = low;
    f.push_back(1);
    if (is_irreducible(p, f)) return f;
  } while (advance(low, p));
  throw std::logic_error("no irreducible polynomial found");
}

std::optional<std::vector<std::uint32_t>> FieldTable::next_irreducible(std::uint32_t p,
                                                                       std::span<const std::uint32_t> after) {
  std::vector<std::uint32_t> low(after.begin(), after.end() - 1);
  while (advance(low, p)) {
    std::vector<std::uint32_t> f = low;
    f.push_back(1);
    if (is_irreducible(p, f)) return f;
  }
  return std::nullopt;
}

std::shared_ptr<const FieldTable> FieldTable::build(std::uint32_t p, std::uint32_t m,
                                                    std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw std::invalid_argument("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > max_order) throw std::invalid_argument("field order exceeds 2^22");
  }

  std::vector<std::uint32_t> f;
  if (modulus) {
    f = *modulus;
    if (f.size() == m) f.push_back(1);
    if (f.size() != m + 1) throw std::invalid_argument("modulus must have degree " + std::to_string(m));
    if (!is_irreducible(p, f)) throw std::invalid_argument("modulus is not a monic irreducible polynomial");
  } else {
    f = least_irreducible(p, m);
  }

  auto table = std::shared_ptr<FieldTable>(new FieldTable());
  FieldTable& t = *table;
  t.p_ = p;
  t.m_ = m;
  t.q_ = static_cast<std::uint32_t>(q);
  t.modulus_ = f;

  const SlowArithmetic slow(p, m, f);
  const std::uint64_t group = q - 1;
  const auto factors = prime_factors(group);
  std::optional<std::uint32_t> alpha;
  for (std::uint32_t c = 1; c < q && !alpha; ++c) {
    if (q == 2) {
      alpha = 1;
      break;
    }
    if (c == 1) continue;
    bool primitive = slow.pow(c, group) == 1;
    for (std::uint64_t l : factors) {
      if (!primitive) break;
      if (slow.pow(c, group / l) == 1) primitive = false;
    }
    if (primitive) alpha = c;
  }
  if (!alpha) throw std::logic_error("no primitive element found");
  t.alpha_ = *alpha;

  t.power_.resize(group);
  t.dlog_.assign(q, 0);
  std::uint32_t cur = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    t.power_[i] = cur;
    t.dlog_[cur] = static_cast<std::uint32_t>(i);
    cur = slow.mul(cur, t.alpha_);
  }
  if (cur != 1) throw std::logic_error("alpha^(q-1) != 1");

  // Tr is GF(p)-linear, so it is fixed by its values on the basis X^i.
  std::vector<std::uint32_t> basis_trace(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    const auto x = static_cast<Element>(ipow(p, i));
    Element acc = 0;
    std::uint64_t pj = 1;
    for (std::uint32_t j = 0; j < m; ++j) {
      acc = t.add(acc, t.power(static_cast<std::int64_t>((t.dlog(x) * pj) % group)));
      pj = pj * p % group;
    }
    if (acc >= p) throw std::logic_error("trace left the prime field");
    basis_trace[i] = acc;
  }
  t.trace_.assign(q, 0);
  if (p == 2) {
    std::uint32_t mask = 0;
    for (std::uint32_t i = 0; i < m; ++i) mask |= basis_trace[i] << i;
    for (std::uint32_t x = 0; x < q; ++x) t.trace_[x] = static_cast<std::uint32_t>(std::popcount(x & mask)) & 1U;
  } else {
    for (std::uint32_t x = 0; x < q; ++x) {
      std::uint64_t acc = 0;
      std::uint32_t v = x;
      for (std::uint32_t i = 0; i < m; ++i, v /= p) acc += static_cast<std::uint64_t>(v % p) * basis_trace[i];
      t.trace_[x] = static_cast<std::uint32_t>(acc % p);
    }
  }
  return table;
}

void FieldTable::check_element(Element x) const {
  if (x >= q_) throw std::out_of_range("element index " + std::to_string(x) + " outside GF(" + std::to_string(q_) + ")");
}

FieldTable::Element FieldTable::power(std::int64_t i) const {
  const std::int64_t n = static_cast<std::int64_t>(q_) - 1;
  std::int64_t r = i % n;
  if (r < 0) r += n;
  return power_[static_cast<std::size_t>(r)];
}

std::uint32_t FieldTable::dlog(Element x) const {
  check_element(x);
  if (x == 0) throw std::domain_error("discrete log of zero");
  return dlog_[x];
}

std::uint32_t FieldTable::trace(Element x) const {
  check_element(x);
  return trace_[x];
}

FieldTable::Element FieldTable::add(Element x, Element y) const {
  if (p_ == 2) return x ^ y;
  Element r = 0;
  Element scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return r;
}

FieldTable::Element FieldTable::neg(Element x) const {
  if (p_ == 2) return x;
  Element r = 0;
  Element scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return r;
}

FieldTable::Element FieldTable::sub(Element x, Element y) const { return add(x, neg(y)); }

FieldTable::Element FieldTable::mul(Element x, Element y) const {
  if (x == 0 || y == 0) return 0;
  const std::uint64_t s = static_cast<std::uint64_t>(dlog_[x]) + dlog_[y];
  return power_[s % (q_ - 1)];
}

FieldTable::Element FieldTable::inv(Element x) const {
  if (x == 0) throw std::domain_error("inverse of zero");
  return power(-static_cast<std::int64_t>(dlog_[x]));
}

FieldTable::Element FieldTable::pow(Element x, std::uint64_t n) const {
  if (n == 0) return 1;
  if (x == 0) return 0;
  return power_[(static_cast<std::uint64_t>(dlog_[x]) * (n % (q_ - 1))) % (q_ - 1)];
}

std::vector<std::uint32_t> FieldTable::coefficients(Element x) const {
  check_element(x);
  std::vector<std::uint32_t> c(m_);
  for (std::uint32_t i = 0; i < m_; ++i, x /= p_) c[i] = x % p_;
  return c;
}

FieldTable::Element FieldTable::from_coefficients(std::span<const std::uint32_t> c) const {
  if (c.size() > m_) throw std::invalid_argument("too many coefficients");
  std::uint64_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
    v = v * p_ + c[i];
  }
  return static_cast<Element>(v);
}

std::vector<std::int64_t> FieldTable::character_counts(std::span<const Element> elements) const {
  std::vector<std::int64_t> counts(p_, 0);
  for (Element x : elements) ++counts[trace(x)];
  return counts;
}

}  // namespace scheme_forge
