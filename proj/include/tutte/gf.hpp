// Copyright 2026 The Authors.
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

// Finite fields GF(p^d) with q = p^d <= 2^31.
//
// Elements are encoded as integers 0..q-1: the base-p digits of the value
// are the coefficients c_0, c_1, ... of the polynomial sum c_i w^i taken
// modulo the defining irreducible polynomial. Values 0..p-1 are therefore
// the prime subfield in every extension.
//
// The defining polynomial is the lexicographically least monic irreducible
// of degree d, where polynomials are compared by the integer whose base-p
// digits are their non-leading coefficients (c_{d-1} most significant).
// The multiplicative generator is the least value of order q-1.

#ifndef TUTTE_GF_HPP
#define TUTTE_GF_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "tutte/error.hpp"

namespace tutte {

struct FieldElem {
  std::uint32_t value = 0;

  friend constexpr bool operator==(FieldElem, FieldElem) = default;
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 31;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// If n = p^d for a prime p returns {p, d}; otherwise {0, 0}.
inline std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t n) {
  if (n < 2) return {0, 0};
  for (std::uint64_t f = 2; f <= n; ++f) {
    if (n % f != 0) continue;
    std::uint32_t d = 0;
    while (n % f == 0) {
      n /= f;
      ++d;
    }
    if (n != 1) return {0, 0};
    return {static_cast<std::uint32_t>(f), d};
  }
  return {0, 0};
}

namespace detail {

using Poly = std::vector<std::uint32_t>;  // low degree first

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo the monic polynomial b over GF(p).
inline Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  poly_trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = lead * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    poly_trim(a);
  }
  return a;
}

inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t d = f.size() - 1;
  if (d <= 1) return d == 1;
  // Degree-one factors: roots.
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = d + 1; i-- > 0;) acc = (acc * x + f[i]) % p;
    if (acc == 0) return false;
  }
  for (std::size_t deg = 2; deg <= d / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    Poly g(deg + 1);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < deg; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[deg] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t d = 0;
  std::uint32_t q = 0;
  Poly irr;
  std::uint32_t gamma = 0;
  std::vector<std::uint32_t> pow_p;  // p^i, i = 0..d

  bool tables = false;
  std::vector<std::uint32_t> exp;  // gamma^i for i in [0, 2(q-1))
  std::vector<std::uint32_t> log;  // log[0] unused
  std::vector<std::uint32_t> add_table;  // only for small odd extensions

  mutable std::once_flag lazy_once;
  mutable std::vector<std::uint32_t> lazy_log;
  mutable std::unordered_map<std::uint32_t, std::uint32_t> baby_steps;
  mutable std::uint32_t giant = 0;
  mutable std::uint32_t giant_len = 0;
};

}  // namespace detail

/// Arithmetic context for GF(p^d). Cheap to copy; immutable and thread safe.
class FieldCtx {
 public:
  static constexpr std::uint32_t kEagerTableLimit = 1u << 16;
  static constexpr std::uint32_t kLazyTableLimit = 1u << 24;

  FieldCtx(std::uint32_t p, std::uint32_t d) {
    require(d >= 1, Errc::InvalidArgument, "extension degree must be >= 1");
    require(is_prime(p), Errc::NotPrime, std::to_string(p) + " is not prime");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
      q *= p;
      require(q <= kMaxFieldOrder, Errc::TooLarge,
              "field order exceeds 2^31");
    }
    auto data = std::make_shared<detail::FieldData>();
    data->p = p;
    data->d = d;
    data->q = static_cast<std::uint32_t>(q);
    data->pow_p.resize(d + 1);
    data->pow_p[0] = 1;
    for (std::uint32_t i = 1; i <= d; ++i) data->pow_p[i] = data->pow_p[i - 1] * p;
    data->irr = choose_irreducible(p, d);
    data_ = data;
    data->gamma = find_generator();
    if (d > 1 && p > 2 && q <= 256) {
      data->add_table.resize(static_cast<std::size_t>(q) * q);
      for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
          data->add_table[static_cast<std::size_t>(a) * q + b] = add_digits(a, b);
    }
    if (q <= kEagerTableLimit) build_tables(*data);
  }

  std::uint32_t p() const { return data_->p; }
  std::uint32_t d() const { return data_->d; }
  std::uint32_t q() const { return data_->q; }
  const std::vector<std::uint32_t>& irr() const { return data_->irr; }
  FieldElem gamma() const { return {data_->gamma}; }
  bool is_prime_field() const { return data_->d == 1; }

  bool operator==(const FieldCtx& o) const {
    return data_ == o.data_ || (p() == o.p() && d() == o.d());
  }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }

  FieldElem elem(std::uint64_t v) const {
    require(v < q(), Errc::IndexOutOfRange,
            "value " + std::to_string(v) + " outside GF(" + std::to_string(q()) + ")");
    return {static_cast<std::uint32_t>(v)};
  }

  /// The image of the integer n in the prime subfield.
  FieldElem from_int(long long n) const {
    const long long p = data_->p;
    long long r = n % p;
    if (r < 0) r += p;
    return {static_cast<std::uint32_t>(r)};
  }

  FieldElem add(FieldElem a, FieldElem b) const {
    const auto& f = *data_;
    if (f.d == 1) {
      std::uint64_t s = std::uint64_t{a.value} + b.value;
      return {static_cast<std::uint32_t>(s >= f.p ? s - f.p : s)};
    }
    if (f.p == 2) return {a.value ^ b.value};
    if (!f.add_table.empty())
      return {f.add_table[static_cast<std::size_t>(a.value) * f.q + b.value]};
    return {add_digits(a.value, b.value)};
  }

  FieldElem neg(FieldElem a) const {
    const auto& f = *data_;
    if (f.d == 1) return {a.value == 0 ? 0 : f.p - a.value};
    if (f.p == 2) return a;
    std::uint32_t out = 0;
    std::uint32_t v = a.value;
    for (std::uint32_t i = 0; i < f.d; ++i) {
      const std::uint32_t c = v % f.p;
      v /= f.p;
      out += (c == 0 ? 0 : f.p - c) * f.pow_p[i];
    }
    return {out};
  }

  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

  FieldElem mul(FieldElem a, FieldElem b) const {
    const auto& f = *data_;
    if (a.value == 0 || b.value == 0) return {0};
    if (f.tables) return {f.exp[f.log[a.value] + f.log[b.value]]};
    if (f.d == 1)
      return {static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % f.p)};
    return {mul_poly(a.value, b.value)};
  }

  FieldElem pow(FieldElem a, std::uint64_t e) const {
    FieldElem r = one();
    FieldElem b = a;
    while (e) {
      if (e & 1u) r = mul(r, b);
      e >>= 1;
      if (e) b = mul(b, b);
    }
    return r;
  }

  FieldElem inv(FieldElem a) const {
    require(a.value != 0, Errc::DivisionByZero, "inverse of zero");
    const auto& f = *data_;
    if (f.tables) return {f.exp[(f.q - 1 - f.log[a.value]) % (f.q - 1)]};
    return pow(a, f.q - 2);
  }

  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

  /// gamma^e for any e >= 0.
  FieldElem gamma_pow(std::uint64_t e) const {
    const auto& f = *data_;
    e %= (f.q - 1);
    if (f.tables) return {f.exp[e]};
    return pow(gamma(), e);
  }

  /// Discrete logarithm base gamma, in 0..q-2.
  std::uint32_t dlog(FieldElem a) const {
    require(a.value != 0, Errc::DivisionByZero, "logarithm of zero");
    const auto& f = *data_;
    if (f.tables) return f.log[a.value];
    if (f.q <= kLazyTableLimit) {
      std::call_once(f.lazy_once, [this] { build_lazy_log(); });
      return f.lazy_log[a.value];
    }
    std::call_once(f.lazy_once, [this] { build_baby_steps(); });
    // Baby-step giant-step: a * giant^j == gamma^i.
    FieldElem cur = a;
    const FieldElem step{f.giant};
    for (std::uint32_t j = 0; j <= f.giant_len; ++j) {
      auto it = f.baby_steps.find(cur.value);
      if (it != f.baby_steps.end()) {
        const std::uint64_t e = std::uint64_t{j} * f.giant_len + it->second;
        return static_cast<std::uint32_t>(e % (f.q - 1));
      }
      cur = mul(cur, step);
    }
    fail(Errc::InternalError, "discrete logarithm not found");
  }

  /// Multiplicative order of a nonzero element.
  std::uint64_t order(FieldElem a) const {
    require(a.value != 0, Errc::DivisionByZero, "order of zero");
    std::uint64_t n = q() - 1;
    for (std::uint64_t r : prime_factors(q() - 1)) {
      while (n % r == 0 && pow(a, n / r) == one()) n /= r;
    }
    return n;
  }

  std::string name() const {
    return "GF(" + std::to_string(p()) + (d() > 1 ? "^" + std::to_string(d()) : "") + ")";
  }

 private:
  static detail::Poly choose_irreducible(std::uint32_t p, std::uint32_t d) {
    if (d == 1) return {0, 1};  // w - 0: arithmetic is plain mod p
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    detail::Poly f(d + 1);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < d; ++i) {
        f[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      f[d] = 1;
      if (detail::is_irreducible(f, p)) return f;
    }
    fail(Errc::InternalError, "no irreducible polynomial found");
  }

  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const {
    const auto& f = *data_;
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < f.d; ++i) {
      const std::uint32_t s = a % f.p + b % f.p;
      a /= f.p;
      b /= f.p;
      out += (s >= f.p ? s - f.p : s) * f.pow_p[i];
    }
    return out;
  }

  std::uint32_t mul_poly(std::uint32_t a, std::uint32_t b) const {
    const auto& f = *data_;
    const std::uint32_t d = f.d;
    const std::uint64_t p = f.p;
    std::array<std::uint32_t, 32> da{}, db{};
    for (std::uint32_t i = 0; i < d; ++i) {
      da[i] = a % f.p;
      a /= f.p;
      db[i] = b % f.p;
      b /= f.p;
    }
    std::array<std::uint64_t, 64> c{};
    for (std::uint32_t i = 0; i < d; ++i) {
      if (!da[i]) continue;
      for (std::uint32_t j = 0; j < d; ++j) c[i + j] = (c[i + j] + std::uint64_t{da[i]} * db[j]) % p;
    }
    for (std::uint32_t i = 2 * d - 2; i >= d; --i) {
      const std::uint64_t lead = c[i] % p;
      if (lead) {
        for (std::uint32_t j = 0; j < d; ++j)
          c[i - d + j] = (c[i - d + j] + (p - lead) * f.irr[j]) % p;
      }
      c[i] = 0;
    }
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < d; ++i) out += static_cast<std::uint32_t>(c[i]) * f.pow_p[i];
    return out;
  }

  std::uint32_t find_generator() const {
    const std::uint32_t q = data_->q;
    if (q == 2) return 1;
    const auto factors = prime_factors(q - 1);
    for (std::uint32_t g = 2; g < q; ++g) {
      bool ok = true;
      for (std::uint64_t r : factors) {
        if (pow(FieldElem{g}, (q - 1) / r) == one()) {
          ok = false;
          break;
        }
      }
      if (ok) return g;
    }
    fail(Errc::InternalError, "no multiplicative generator found");
  }

  void build_tables(detail::FieldData& f) const {
    const std::uint32_t n = f.q - 1;
    f.exp.resize(2 * static_cast<std::size_t>(n));
    f.log.assign(f.q, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      f.exp[i] = cur;
      f.log[cur] = i;
      cur = mul(FieldElem{cur}, FieldElem{f.gamma}).value;
    }
    for (std::uint32_t i = 0; i < n; ++i) f.exp[n + i] = f.exp[i];
    f.tables = true;
  }

  void build_lazy_log() const {
    const auto& f = *data_;
    f.lazy_log.assign(f.q, 0);
    FieldElem cur = one();
    for (std::uint32_t i = 0; i + 1 < f.q; ++i) {
      f.lazy_log[cur.value] = i;
      cur = mul(cur, gamma());
    }
  }

  void build_baby_steps() const {
    const auto& f = *data_;
    std::uint32_t len = 1;
    while (std::uint64_t{len} * len < f.q - 1) ++len;
    f.giant_len = len;
    FieldElem cur = one();
    for (std::uint32_t i = 0; i < len; ++i) {
      f.baby_steps.emplace(cur.value, i);
      cur = mul(cur, gamma());
    }
    f.giant = inv(cur).value;  // gamma^{-len}
  }

  std::shared_ptr<const detail::FieldData> data_;
};

/// Field homomorphism GF(p^e) -> GF(p^{e*t}) realised through discrete
/// logarithms: gamma_src^i maps to beta^i, where beta is the image of the
/// source generator under the map sending w to a root of the source
/// irreducible inside the target's order-(q-1) subgroup.
class FieldEmbedding {
 public:
  FieldEmbedding(const FieldCtx& src, const FieldCtx& dst) : src_(src), dst_(dst) {
    require(src.p() == dst.p(), Errc::CharMismatch,
            src.name() + " and " + dst.name() + " differ in characteristic");
    require(dst.d() % src.d() == 0, Errc::InvalidArgument,
            src.name() + " is not a subfield of " + dst.name());
    const std::uint32_t q = src.q();
    table_.resize(q);
    if (src.d() == 1) {
      for (std::uint32_t a = 0; a < q; ++a) table_[a] = a;
      return;
    }
    const std::uint64_t big = dst.q() - 1;
    const std::uint64_t cofactor = big / (q - 1);
    FieldElem theta{0};
    bool found = false;
    for (std::uint64_t i = 1; i < q - 1 && !found; ++i) {
      const FieldElem x = dst.gamma_pow(i * cofactor);
      FieldElem acc = dst.zero();
      const auto& irr = src.irr();
      for (std::size_t j = irr.size(); j-- > 0;) acc = dst.add(dst.mul(acc, x), FieldElem{irr[j]});
      if (acc == dst.zero()) {
        theta = x;
        found = true;
      }
    }
    require(found, Errc::InternalError, "no root of the source polynomial in target");
    // beta = image of gamma_src = sum c_j theta^j over the digits of gamma_src.
    auto image_of = [&](std::uint32_t v) {
      FieldElem acc = dst.zero();
      FieldElem pw = dst.one();
      for (std::uint32_t j = 0; j < src.d(); ++j) {
        acc = dst.add(acc, dst.mul(FieldElem{v % src.p()}, pw));
        v /= src.p();
        pw = dst.mul(pw, theta);
      }
      return acc;
    };
    const FieldElem beta = image_of(src.gamma().value);
    table_[0] = 0;
    FieldElem cur = dst.one();
    for (std::uint32_t e = 0; e + 1 < q; ++e) {
      table_[src.gamma_pow(e).value] = cur.value;
      cur = dst.mul(cur, beta);
    }
    if (std::uint64_t{q} * q <= (1u << 22)) verify();
  }

  FieldElem operator()(FieldElem a) const {
    require(a.value < table_.size(), Errc::IndexOutOfRange, "element outside source field");
    return {table_[a.value]};
  }

  const FieldCtx& source() const { return src_; }
  const FieldCtx& target() const { return dst_; }

 private:
  void verify() const {
    const std::uint32_t q = src_.q();
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        const FieldElem x{a}, y{b};
        if ((*this)(src_.add(x, y)) != dst_.add((*this)(x), (*this)(y)) ||
            (*this)(src_.mul(x, y)) != dst_.mul((*this)(x), (*this)(y))) {
          fail(Errc::InternalError, "field embedding is not a homomorphism");
        }
      }
    }
  }

  FieldCtx src_;
  FieldCtx dst_;
  std::vector<std::uint32_t> table_;
};

/// Embeds an element of `base` into `target`. For a prime base field this is
/// the identity on encodings.
inline FieldElem embed(FieldElem a, const FieldCtx& base, const FieldCtx& target) {
  require(base.p() == target.p(), Errc::CharMismatch,
          base.name() + " and " + target.name() + " differ in characteristic");
  require(a.value < base.q(), Errc::IndexOutOfRange, "element outside base field");
  if (base.d() == 1) return a;
  return FieldEmbedding(base, target)(a);
}

}  // namespace tutte

#endif  // TUTTE_GF_HPP
