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


// Full-support codeword counts and the evaluation T(1 - q^d, 0) that
// predicts them.

#ifndef TUTTE_CRITICAL_HPP
#define TUTTE_CRITICAL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "tutte/algorithms.hpp"
#include "tutte/gf.hpp"
#include "tutte/matroid.hpp"
#include "tutte/tutte_core.hpp"

namespace tutte {

inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 22;

/// A code given by a full-row-rank generator matrix.
class LinearCode {
 public:
  explicit LinearCode(FqMatrix gen) : gen_(std::move(gen)) { require_full_rank(gen_, "LinearCode"); }

  const FqMatrix& gen() const { return gen_; }
  const FieldCtx& ctx() const { return gen_.ctx(); }
  int k() const { return gen_.k(); }
  int m() const { return gen_.m(); }

  std::vector<FieldElem> encode(const std::vector<FieldElem>& x) const {
    require(static_cast<int>(x.size()) == k(), Errc::SizeMismatch, "message length differs from k");
    std::vector<FieldElem> y(m(), ctx().zero());
    for (int r = 0; r < k(); ++r) {
      if (x[r].value == 0) continue;
      for (int c = 0; c < m(); ++c) y[c] = ctx().add(y[c], ctx().mul(x[r], gen_.at(r, c)));
    }
    return y;
  }

 private:
  FqMatrix gen_;
};

namespace detail {

/// q^e, or limit + 1 once it passes limit.
inline std::uint64_t capped_power(std::uint64_t q, std::uint64_t e, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    v *= q;
    if (v > limit) return limit + 1;
  }
  return v;
}

using Words = std::vector<std::uint64_t>;

/// Support bitmask of xG for every message x, indexed in base q with x_0
/// least significant.
inline std::vector<Words> codeword_supports(const FqMatrix& gen) {
  const auto& f = gen.ctx();
  const int k = gen.k(), m = gen.m();
  const std::size_t words = (static_cast<std::size_t>(m) + 63) / 64;
  const std::uint64_t q = f.q();
  std::uint64_t n = 1;
  for (int i = 0; i < k; ++i) n *= q;
  std::vector<Words> out(n, Words(words, 0));
  std::vector<FieldElem> y(m, f.zero());
  std::vector<std::uint64_t> digits(k, 0);
  for (std::uint64_t x = 0; x < n; ++x) {
    if (x > 0) {
      // Odometer step: digits below i roll over from q-1 to 0, digit i grows.
      int i = 0;
      while (digits[i] == q - 1) {
        const FieldElem minus = f.neg(FieldElem{static_cast<std::uint32_t>(q - 1)});
        for (int c = 0; c < m; ++c) y[c] = f.add(y[c], f.mul(minus, gen.at(i, c)));
        digits[i++] = 0;
      }
      const FieldElem step = f.sub(FieldElem{static_cast<std::uint32_t>(digits[i] + 1)},
                                   FieldElem{static_cast<std::uint32_t>(digits[i])});
      for (int c = 0; c < m; ++c) y[c] = f.add(y[c], f.mul(step, gen.at(i, c)));
      ++digits[i];
    }
    for (int c = 0; c < m; ++c)
      if (y[c].value) out[x][c / 64] |= std::uint64_t{1} << (c % 64);
  }
  return out;
}

inline Words full_words(int m) {
  Words w((static_cast<std::size_t>(m) + 63) / 64, ~std::uint64_t{0});
  if (m % 64) w.back() = (std::uint64_t{1} << (m % 64)) - 1;
  return w;
}

}  // namespace detail

/// Number of messages x with xG free of zero coordinates.
inline BigInt count_full_support(const LinearCode& code, int threads = 1) {
  const std::uint64_t n =
      detail::capped_power(code.ctx().q(), static_cast<std::uint64_t>(code.k()), kEnumerationLimit);
  require(n <= kEnumerationLimit, Errc::TooLarge,
          "q^k exceeds the enumeration limit of 2^22 for " + code.ctx().name());
  const auto supports = detail::codeword_supports(code.gen());
  const auto full = detail::full_words(code.m());
  threads = std::max(1, threads);
  std::vector<std::uint64_t> partial(threads, 0);
  auto work = [&](int t) {
    for (std::size_t x = static_cast<std::size_t>(t); x < supports.size(); x += threads)
      partial[t] += supports[x] == full;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  BigInt total = 0;
  for (auto v : partial) total += v;
  return total;
}

/// Number of d-tuples of codewords whose supports cover every coordinate, by
/// enumerating (F_q^k)^d.
inline BigInt count_full_support_tuples_direct(const LinearCode& code, int d) {
  require(d >= 1, Errc::InvalidArgument, "tuple length must be positive");
  const std::uint64_t n = detail::capped_power(code.ctx().q(),
                                               static_cast<std::uint64_t>(code.k()) * d, kEnumerationLimit);
  require(n <= kEnumerationLimit, Errc::TooLarge, "q^(dk) exceeds the enumeration limit of 2^22");
  const auto supports = detail::codeword_supports(code.gen());
  const auto full = detail::full_words(code.m());
  std::uint64_t count = 0;
  std::vector<detail::Words> acc(d + 1, detail::Words(full.size(), 0));
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == d) {
      count += acc[d] == full;
      return;
    }
    for (const auto& s : supports) {
      for (std::size_t w = 0; w < s.size(); ++w) acc[depth + 1][w] = acc[depth][w] | s[w];
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  return count;
}

/// GF(p^e) with q = p^e, extended to GF(p^{e d}).
inline FieldCtx extension_field(const FieldCtx& base, int d) {
  require(d >= 1, Errc::InvalidArgument, "extension degree must be positive");
  return FieldCtx(base.p(), base.d() * static_cast<std::uint32_t>(d));
}

/// The code over GF(q^d) generated by G embedded elementwise.
inline LinearCode extension_code(const LinearCode& code, int d) {
  const FieldCtx big = extension_field(code.ctx(), d);
  const FieldEmbedding emb(code.ctx(), big);
  FqMatrix g(big, code.k(), code.m());
  for (int r = 0; r < code.k(); ++r)
    for (int c = 0; c < code.m(); ++c) g.set(r, c, emb(code.gen().at(r, c)));
  g.set_col_labels(code.gen().col_labels());
  return LinearCode(std::move(g));
}

struct TupleCounts {
  BigInt direct;
  BigInt extension;
};

/// Both counting routes, without comparing them.
inline TupleCounts full_support_tuple_routes(const LinearCode& code, int d) {
  return {count_full_support_tuples_direct(code, d), count_full_support(extension_code(code, d))};
}

/// Full-support d-tuple count; both routes are run and must agree.
inline BigInt count_full_support_tuples(const LinearCode& code, int d) {
  auto r = full_support_tuple_routes(code, d);
  require(r.direct == r.extension, Errc::InternalError,
          "tuple enumeration (" + to_string(r.direct) + ") and extension code (" +
              to_string(r.extension) + ") disagree");
  return r.direct;
}

/// (-1)^k T(1 - q^d, 0).
inline BigInt critical_evaluation(const TuttePoly& tp, std::uint64_t q, int d) {
  const BigInt x = BigInt(1) - pow_big(BigInt(q), static_cast<unsigned>(d));
  BigInt v = evaluate(tp, x, BigInt(0));
  return tp.k % 2 ? BigInt(-v) : v;
}

struct CriticalReport {
  std::string algorithm;
  int d = 1;
  std::uint64_t q = 2;
  int k = 0;
  int m = 0;
  BigInt count;       // full-support d-tuples
  BigInt evaluation;  // (-1)^k T(1 - q^d, 0)
  bool pass = false;
  TuttePoly poly;
};

/// Compares the tuple count against a given polynomial.
inline CriticalReport verify_critical_with(const LinearCode& code, int d, const TuttePoly& poly,
                                           std::string algorithm = "given") {
  require(poly.k == code.k() && poly.m == code.m(), Errc::SizeMismatch,
          "polynomial shape differs from the code");
  CriticalReport rep;
  rep.algorithm = std::move(algorithm);
  rep.d = d;
  rep.q = code.ctx().q();
  rep.k = code.k();
  rep.m = code.m();
  rep.poly = poly;
  rep.count = d == 1 ? count_full_support(code) : count_full_support_tuples(code, d);
  rep.evaluation = critical_evaluation(poly, rep.q, d);
  rep.pass = rep.count == rep.evaluation;
  return rep;
}

inline CriticalReport verify_critical(const LinearCode& code, int d, TutteAlgorithm algo, int threads = 1) {
  const auto poly = tau_to_tutte(compute_tau(code.gen(), algo, threads), true);
  return verify_critical_with(code, d, poly, std::string(algorithm_name(algo)));
}

}  // namespace tutte

#endif  // TUTTE_CRITICAL_HPP
