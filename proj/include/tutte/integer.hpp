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

#ifndef TUTTE_INTEGER_HPP
#define TUTTE_INTEGER_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tutte/error.hpp"

namespace tutte {

using BigInt = boost::multiprecision::cpp_int;
using Int128 = __int128;

inline BigInt to_big(Int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  BigInt r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-r) : r;
}

inline BigInt to_big(const BigInt& v) { return v; }

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(Int128 v) { return to_big(v).str(); }

/// Parses an optionally signed decimal integer; throws ParseError.
inline BigInt parse_bigint(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  require(i < text.size(), Errc::ParseError, "empty integer '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    require(text[j] >= '0' && text[j] <= '9', Errc::ParseError,
            "not an integer: '" + text + "'");
  }
  return BigInt(text);
}

inline BigInt pow_big(const BigInt& base, unsigned exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp) {
    if (exp & 1u) r *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return r;
}

/// Pascal triangle rows 0..n, held as T.
template <class T>
class BinomialTable {
 public:
  explicit BinomialTable(int n) : n_(n), rows_(static_cast<std::size_t>(n) + 1) {
    for (int i = 0; i <= n; ++i) {
      rows_[i].assign(static_cast<std::size_t>(i) + 1, T(1));
      for (int j = 1; j < i; ++j) rows_[i][j] = rows_[i - 1][j - 1] + rows_[i - 1][j];
    }
  }

  const T& operator()(int a, int b) const {
    static const T zero = T(0);
    if (b < 0 || a < 0 || b > a || a > n_) return zero;
    return rows_[a][b];
  }

  int size() const { return n_; }

 private:
  int n_;
  std::vector<std::vector<T>> rows_;
};

inline BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Counters for every exact division performed by the dynamic programs.
/// A violation always throws; the counter exists so test drivers can report
/// how many checks ran.
struct ExactnessStats {
  std::atomic<std::uint64_t> checks{0};
  std::atomic<std::uint64_t> violations{0};
};

inline ExactnessStats& exactness_stats() {
  static ExactnessStats stats;
  return stats;
}

template <class T>
T exact_div(const T& num, long long den, const char* what) {
  auto& st = exactness_stats();
  st.checks.fetch_add(1, std::memory_order_relaxed);
  if (den == 0 || num % T(den) != 0) {
    st.violations.fetch_add(1, std::memory_order_relaxed);
    fail(Errc::InternalError, std::string("non-exact division by ") +
                                  std::to_string(den) + " in " + what);
  }
  return num / T(den);
}

}  // namespace tutte

#endif  // TUTTE_INTEGER_HPP
