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

// Rank-size tables, Tutte polynomials, and the subset-enumeration oracle.
//
// The rank-size table tau[r][s] counts column subsets of rank r and size s.
// All three algorithms produce this table; it converts to the monomial
// basis through
//
//   T(x, y) = sum_{r,s} tau[r][s] (x-1)^{k-r} (y-1)^{s-r}.

#ifndef TUTTE_TUTTE_CORE_HPP
#define TUTTE_TUTTE_CORE_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tutte/error.hpp"
#include "tutte/integer.hpp"
#include "tutte/matroid.hpp"
#include "tutte/text.hpp"

namespace tutte {

struct RankSizeTable {
  int k = 0;
  int m = 0;
  std::vector<std::vector<BigInt>> tau;

  RankSizeTable() = default;
  RankSizeTable(int k_, int m_)
      : k(k_), m(m_),
        tau(static_cast<std::size_t>(k_) + 1,
            std::vector<BigInt>(static_cast<std::size_t>(m_) + 1)) {}

  BigInt& at(int r, int s) { return tau.at(r).at(s); }
  const BigInt& at(int r, int s) const { return tau.at(r).at(s); }

  BigInt total() const {
    BigInt t = 0;
    for (const auto& row : tau)
      for (const auto& v : row) t += v;
    return t;
  }

  bool operator==(const RankSizeTable&) const = default;
};

inline std::ostream& operator<<(std::ostream& out, const RankSizeTable& t) {
  out << "tau k=" << t.k << " m=" << t.m << '\n';
  for (int r = 0; r <= t.k; ++r) {
    for (int s = 0; s <= t.m; ++s) out << (s ? " " : "") << t.tau[r][s];
    out << '\n';
  }
  return out;
}

/// Checks the structural invariants of a table produced from a matroid.
inline void check_table(const RankSizeTable& t) {
  require(t.total() == pow_big(2, static_cast<unsigned>(t.m)), Errc::InternalError,
          "rank-size table does not sum to 2^m");
  require(t.at(0, 0) == 1, Errc::InternalError, "tau[0][0] != 1");
  for (int r = 0; r <= t.k; ++r)
    for (int s = 0; s <= t.m; ++s) {
      require(t.tau[r][s] >= 0, Errc::InternalError, "negative table entry");
      require(r <= s || t.tau[r][s] == 0, Errc::InternalError, "rank exceeds size");
    }
}

struct TuttePoly {
  int k = 0;
  int m = 0;
  std::map<std::pair<int, int>, BigInt> coeff;  // (i, j) -> coefficient of x^i y^j, no zeros

  BigInt coefficient(int i, int j) const {
    auto it = coeff.find({i, j});
    return it == coeff.end() ? BigInt(0) : it->second;
  }

  bool operator==(const TuttePoly&) const = default;
};

/// Human-readable form such as "x^2 + x + y".
inline std::string to_string(const TuttePoly& tp) {
  if (tp.coeff.empty()) return "0";
  std::string out;
  for (auto it = tp.coeff.rbegin(); it != tp.coeff.rend(); ++it) {
    const auto [i, j] = it->first;
    BigInt c = it->second;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    if (c < 0) c = -c;
    std::string mono;
    if (i) mono += i == 1 ? "x" : "x^" + std::to_string(i);
    if (j) mono += (mono.empty() ? "" : "*") + (j == 1 ? std::string("y") : "y^" + std::to_string(j));
    if (mono.empty()) out += c.str();
    else out += (c == 1 ? "" : c.str() + "*") + mono;
  }
  return out;
}

inline TuttePoly tau_to_tutte(const RankSizeTable& t, bool check_nonnegative = false) {
  TuttePoly tp;
  tp.k = t.k;
  tp.m = t.m;
  BinomialTable<BigInt> binom(std::max(t.k, t.m));
  std::map<std::pair<int, int>, BigInt> acc;
  for (int r = 0; r <= t.k; ++r) {
    for (int s = r; s <= t.m; ++s) {
      const BigInt& v = t.tau[r][s];
      if (v == 0) continue;
      const int a = t.k - r;
      const int b = s - r;
      for (int i = 0; i <= a; ++i) {
        BigInt ci = v * binom(a, i);
        if ((a - i) & 1) ci = -ci;
        for (int j = 0; j <= b; ++j) {
          BigInt c = ci * binom(b, j);
          if ((b - j) & 1) c = -c;
          acc[{i, j}] += c;
        }
      }
    }
  }
  for (auto& [key, c] : acc) {
    if (c == 0) continue;
    if (check_nonnegative)
      require(c > 0, Errc::InternalError,
              "negative Tutte coefficient at x^" + std::to_string(key.first) + " y^" +
                  std::to_string(key.second));
    tp.coeff.emplace(key, std::move(c));
  }
  return tp;
}

inline BigInt evaluate(const TuttePoly& tp, const BigInt& x0, const BigInt& y0) {
  int dx = 0, dy = 0;
  for (const auto& [key, c] : tp.coeff) {
    dx = std::max(dx, key.first);
    dy = std::max(dy, key.second);
  }
  std::vector<BigInt> px(dx + 1), py(dy + 1);
  px[0] = py[0] = 1;
  for (int i = 1; i <= dx; ++i) px[i] = px[i - 1] * x0;
  for (int j = 1; j <= dy; ++j) py[j] = py[j - 1] * y0;
  BigInt out = 0;
  for (const auto& [key, c] : tp.coeff) out += c * px[key.first] * py[key.second];
  return out;
}

namespace detail {

struct BruteTask {
  int next = 0;
  int size = 0;
  EchelonBasis basis;
};

class BruteForce {
 public:
  BruteForce(const FqMatrix& mat, std::vector<std::vector<std::uint64_t>>& counts,
             const BinomialTable<std::uint64_t>& binom)
      : mat_(mat), counts_(counts), binom_(binom) {
    for (int c = 0; c < mat.m(); ++c) cols_.push_back(mat.column(c));
  }

  void run(int i, int size, const EchelonBasis& basis) {
    const int m = mat_.m();
    if (basis.rank() == mat_.k()) {
      // Every extension keeps full rank.
      for (int j = 0; j <= m - i; ++j) counts_[basis.rank()][size + j] += binom_(m - i, j);
      return;
    }
    if (i == m) {
      ++counts_[basis.rank()][size];
      return;
    }
    run(i + 1, size, basis);
    if (basis.in_span(cols_[i])) {
      run(i + 1, size + 1, basis);
    } else {
      EchelonBasis grown = basis;
      grown.insert(cols_[i]);
      run(i + 1, size + 1, grown);
    }
  }

  // Expands the first `depth` decisions into independent tasks.
  void split(int i, int size, const EchelonBasis& basis, int depth, std::vector<BruteTask>& out) {
    if (depth == 0 || i == mat_.m() || basis.rank() == mat_.k()) {
      out.push_back({i, size, basis});
      return;
    }
    split(i + 1, size, basis, depth - 1, out);
    EchelonBasis grown = basis;
    grown.insert(cols_[i]);
    split(i + 1, size + 1, grown, depth - 1, out);
  }

 private:
  const FqMatrix& mat_;
  std::vector<std::vector<std::uint64_t>>& counts_;
  const BinomialTable<std::uint64_t>& binom_;
  std::vector<std::vector<FieldElem>> cols_;
};

}  // namespace detail

inline constexpr int kBruteForceMaxColumns = 24;

/// Exact rank-size table by enumerating all 2^m column subsets.
inline RankSizeTable tutte_bruteforce(const FqMatrix& mat, int threads = 1) {
  require(mat.m() <= kBruteForceMaxColumns, Errc::TooManyColumns,
          "subset enumeration needs m <= " + std::to_string(kBruteForceMaxColumns) + ", got " +
              std::to_string(mat.m()));
  require_full_rank(mat, "tutte_bruteforce");
  const int k = mat.k();
  const int m = mat.m();
  const BinomialTable<std::uint64_t> binom(m);
  auto fresh = [&] {
    return std::vector<std::vector<std::uint64_t>>(k + 1, std::vector<std::uint64_t>(m + 1, 0));
  };
  auto counts = fresh();
  threads = std::max(1, threads);
  if (threads == 1) {
    detail::BruteForce(mat, counts, binom).run(0, 0, EchelonBasis(mat.ctx(), k));
  } else {
    std::vector<detail::BruteTask> tasks;
    int depth = 0;
    while ((1 << depth) < 4 * threads && depth < m) ++depth;
    detail::BruteForce(mat, counts, binom).split(0, 0, EchelonBasis(mat.ctx(), k), depth, tasks);
    std::atomic<std::size_t> next{0};
    std::vector<std::vector<std::vector<std::uint64_t>>> partial(threads, fresh());
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        detail::BruteForce worker(mat, partial[t], binom);
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();)
          worker.run(tasks[i].next, tasks[i].size, tasks[i].basis);
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& part : partial)
      for (int r = 0; r <= k; ++r)
        for (int s = 0; s <= m; ++s) counts[r][s] += part[r][s];
  }
  RankSizeTable t(k, m);
  for (int r = 0; r <= k; ++r)
    for (int s = 0; s <= m; ++s) t.tau[r][s] = counts[r][s];
  return t;
}

// ---- polynomial text format --------------------------------------------------

inline void write_poly(std::ostream& out, const TuttePoly& tp) {
  out << "tutte " << tp.k << ' ' << tp.m << '\n';
  for (const auto& [key, c] : tp.coeff) out << key.first << ' ' << key.second << ' ' << c << '\n';
}

inline TuttePoly read_poly(std::istream& in) {
  const auto lines = read_text_lines(in);
  require(!lines.empty(), Errc::ParseError, "empty polynomial file");
  expect_tokens(lines[0], 3);
  require(lines[0].tokens[0] == "tutte", Errc::ParseError, "polynomial header must start with 'tutte'");
  TuttePoly tp;
  tp.k = static_cast<int>(parse_in_range(lines[0].tokens[1], lines[0].number, 0, 1 << 20));
  tp.m = static_cast<int>(parse_in_range(lines[0].tokens[2], lines[0].number, 0, 1 << 20));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    expect_tokens(l, 3);
    const int x = static_cast<int>(parse_in_range(l.tokens[0], l.number, 0, tp.k));
    const int y = static_cast<int>(parse_in_range(l.tokens[1], l.number, 0, tp.m));
    BigInt c = parse_bigint(l.tokens[2]);
    require(!tp.coeff.count({x, y}), Errc::ParseError,
            "line " + std::to_string(l.number) + ": duplicate monomial");
    if (c != 0) tp.coeff.emplace(std::make_pair(x, y), std::move(c));
  }
  return tp;
}

}  // namespace tutte

#endif  // TUTTE_TUTTE_CORE_HPP
