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

// Tutte polynomial by enumeration of least generators.
//
// Columns are totally ordered by index. The least generator L(S) of a
// column set S is its size-lexicographically least subset spanning the
// same space; it is independent and L(I) = I for every independent I.
// For independent I, P(I) holds the columns f whose vector lies in the span
// of {e in I : e < f}. Every S decomposes uniquely as L(S) plus a subset of
// P(L(S)), so
//
//   tau[l][l + j] = sum over independent I with |I| = l of C(|P(I)|, j).

#ifndef TUTTE_LEXGEN_HPP
#define TUTTE_LEXGEN_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "tutte/error.hpp"
#include "tutte/integer.hpp"
#include "tutte/matroid.hpp"
#include "tutte/tutte_core.hpp"

namespace tutte {

/// Greedy scan of S in column order keeping columns that raise the rank.
inline ColumnSet least_generator(const FqMatrix& mat, const ColumnSet& s) {
  require(static_cast<int>(s.size()) == mat.m(), Errc::IndexOutOfRange, "column set width");
  EchelonBasis basis(mat.ctx(), mat.k());
  ColumnSet out = empty_set(mat.m());
  for (auto c = s.find_first(); c != ColumnSet::npos; c = s.find_next(c)) {
    if (basis.insert(mat.column(static_cast<int>(c)))) out.set(c);
  }
  return out;
}

/// True iff I = L(I); for column sets this holds exactly when I is independent.
inline bool is_least_generator(const FqMatrix& mat, const ColumnSet& i) {
  return least_generator(mat, i) == i;
}

inline ColumnSet prefix_dependent_set(const FqMatrix& mat, const ColumnSet& i) {
  require(static_cast<int>(i.size()) == mat.m(), Errc::IndexOutOfRange, "column set width");
  EchelonBasis basis(mat.ctx(), mat.k());
  ColumnSet out = empty_set(mat.m());
  for (int f = 0; f < mat.m(); ++f) {
    const auto col = mat.column(f);
    if (basis.in_span(col)) out.set(static_cast<std::size_t>(f));
    if (i.test(static_cast<std::size_t>(f))) {
      require(basis.insert(col), Errc::InvalidArgument, "column set is not independent");
    }
  }
  return out;
}

struct LexgenStats {
  std::uint64_t visited = 0;  // independent sets enumerated, including the empty set
};

namespace detail {

class LexgenWalker {
 public:
  // hist[l][c] counts independent sets of size l with |P(I)| = c.
  LexgenWalker(const FqMatrix& mat, std::vector<std::vector<std::uint64_t>>& hist)
      : ctx_(mat.ctx()), k_(mat.k()), m_(mat.m()), hist_(hist) {
    cols_.resize(m_);
    for (int c = 0; c < m_; ++c) cols_[c] = mat.column(c);
  }

  std::uint64_t visited() const { return visited_; }

  /// The empty set: P is the set of zero columns.
  void visit_root() {
    int zeros = 0;
    for (const auto& v : cols_) zeros += is_zero(v);
    ++visited_;
    ++hist_[0][zeros];
  }

  /// Explores every independent set whose least element is `first`.
  void explore_from(int first) {
    if (is_zero(cols_[first])) return;
    // Zero columns before `first` are prefix dependent for every I.
    int prefix = 0;
    for (int f = 0; f < first; ++f) prefix += is_zero(cols_[f]);
    std::vector<std::vector<FieldElem>> res(cols_.begin() + first, cols_.end());
    grow(std::move(res), first, 1, prefix);
  }

 private:
  static bool is_zero(const std::vector<FieldElem>& v) {
    return std::all_of(v.begin(), v.end(), [](FieldElem e) { return e.value == 0; });
  }

  // res[j] is the residual of column base + j modulo span(I \ {base}); the
  // element `base` is the newest member of I and res[0] its nonzero residual.
  // prefix = number of f < base lying in P(I).
  void grow(std::vector<std::vector<FieldElem>> res, int base, int size, int prefix) {
    ++visited_;
    const auto& piv_vec = res[0];
    int piv = 0;
    while (piv_vec[piv].value == 0) ++piv;
    const FieldElem inv = ctx_.inv(piv_vec[piv]);
    const int n = static_cast<int>(res.size());
    std::vector<bool> dep(n, false);
    int later_dep = 0;
    for (int j = 1; j < n; ++j) {
      auto& r = res[j];
      if (r[piv].value) {
        const FieldElem c = ctx_.mul(r[piv], inv);
        for (int t = 0; t < k_; ++t)
          if (piv_vec[t].value) r[t] = ctx_.sub(r[t], ctx_.mul(c, piv_vec[t]));
      }
      dep[j] = is_zero(r);
      later_dep += dep[j];
    }
    ++hist_[size][prefix + later_dep];
    if (size == k_) return;
    // Extend by each later independent column e'; columns strictly between
    // base and e' that lie in span(I) join the prefix count.
    int between = 0;
    for (int j = 1; j < n; ++j) {
      if (dep[j]) {
        ++between;
        continue;
      }
      std::vector<std::vector<FieldElem>> next(res.begin() + j, res.end());
      grow(std::move(next), base + j, size + 1, prefix + between);
    }
  }

  FieldCtx ctx_;
  int k_;
  int m_;
  std::vector<std::vector<FieldElem>> cols_;
  std::vector<std::vector<std::uint64_t>>& hist_;
  std::uint64_t visited_ = 0;
};

}  // namespace detail

inline RankSizeTable tutte_lexgen(const FqMatrix& mat, LexgenStats* stats = nullptr, int threads = 1) {
  require_full_rank(mat, "tutte_lexgen");
  const int k = mat.k();
  const int m = mat.m();
  auto fresh = [&] {
    return std::vector<std::vector<std::uint64_t>>(k + 1, std::vector<std::uint64_t>(m + 1, 0));
  };
  auto hist = fresh();
  std::uint64_t visited = 0;
  threads = std::max(1, std::min(threads, std::max(1, m)));
  {
    detail::LexgenWalker root(mat, hist);
    root.visit_root();
    visited += root.visited();
  }
  if (threads == 1) {
    detail::LexgenWalker w(mat, hist);
    for (int first = 0; first < m; ++first) w.explore_from(first);
    visited += w.visited();
  } else {
    std::vector<std::vector<std::vector<std::uint64_t>>> partial(threads, fresh());
    std::vector<std::uint64_t> counts(threads, 0);
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        detail::LexgenWalker w(mat, partial[t]);
        for (int first; (first = next.fetch_add(1)) < m;) w.explore_from(first);
        counts[t] = w.visited();
      });
    }
    for (auto& th : pool) th.join();
    for (int t = 0; t < threads; ++t) {
      visited += counts[t];
      for (int l = 0; l <= k; ++l)
        for (int c = 0; c <= m; ++c) hist[l][c] += partial[t][l][c];
    }
  }
  RankSizeTable tau(k, m);
  const BinomialTable<BigInt> binom(m);
  for (int l = 0; l <= k; ++l)
    for (int c = 0; c <= m; ++c) {
      if (!hist[l][c]) continue;
      const BigInt h = hist[l][c];
      for (int j = 0; j <= c && l + j <= m; ++j) tau.tau[l][l + j] += h * binom(c, j);
    }
  if (stats) stats->visited = visited;
  return tau;
}

}  // namespace tutte

#endif  // TUTTE_LEXGEN_HPP
