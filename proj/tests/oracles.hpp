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

// Independent reference computations used only by the test suites. None of
// these share code paths with the library algorithms they check.

#ifndef TUTTE_TESTS_ORACLES_HPP
#define TUTTE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "tutte/gf.hpp"
#include "tutte/integer.hpp"
#include "tutte/matroid.hpp"
#include "tutte/tutte_core.hpp"

namespace oracle {

using tutte::BigInt;
using tutte::FieldCtx;
using tutte::FieldElem;
using tutte::FqMatrix;

// Determinant by the Leibniz permutation sum.
inline FieldElem det(const FieldCtx& f, const std::vector<std::vector<FieldElem>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  FieldElem total = f.zero();
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    FieldElem term = f.one();
    for (int i = 0; i < n; ++i) term = f.mul(term, a[i][perm[i]]);
    total = (inversions & 1) ? f.sub(total, term) : f.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Rank as the largest order of a nonzero minor. Exponential; k <= 5.
inline int minor_rank(const FqMatrix& mat, const std::vector<int>& cols) {
  const int k = mat.k();
  const int n = static_cast<int>(cols.size());
  for (int r = std::min(k, n); r > 0; --r) {
    std::vector<bool> rs(k, false), cs(n, false);
    std::fill(rs.begin(), rs.begin() + r, true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + r, true);
      do {
        std::vector<std::vector<FieldElem>> sub;
        for (int i = 0; i < k; ++i) {
          if (!rs[i]) continue;
          sub.emplace_back();
          for (int j = 0; j < n; ++j)
            if (cs[j]) sub.back().push_back(mat.at(i, cols[j]));
        }
        if (det(mat.ctx(), sub).value != 0) return r;
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
  }
  return 0;
}

inline std::vector<int> mask_cols(unsigned long long mask, int m) {
  std::vector<int> cols;
  for (int c = 0; c < m; ++c)
    if (mask >> c & 1) cols.push_back(c);
  return cols;
}

// Rank-size table through the minor rank oracle.
inline tutte::RankSizeTable minor_tau(const FqMatrix& mat) {
  tutte::RankSizeTable t(mat.k(), mat.m());
  for (unsigned long long mask = 0; mask < (1ull << mat.m()); ++mask) {
    const auto cols = mask_cols(mask, mat.m());
    t.tau[minor_rank(mat, cols)][cols.size()] += 1;
  }
  return t;
}

// Union-find graph rank: |V| minus number of components of (V, S).
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

inline int graph_rank(int k, const std::vector<std::pair<int, int>>& edges, unsigned long long mask) {
  UnionFind uf(k);
  int r = 0;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (mask >> e & 1) r += uf.unite(edges[e].first, edges[e].second);
  return r;
}

// Tutte polynomial of a graph by edge-subset enumeration with union-find.
inline tutte::RankSizeTable graph_tau(int k, const std::vector<std::pair<int, int>>& edges) {
  const int m = static_cast<int>(edges.size());
  const int full = graph_rank(k, edges, (1ull << m) - 1);
  tutte::RankSizeTable t(full, m);
  for (unsigned long long mask = 0; mask < (1ull << m); ++mask)
    t.tau[graph_rank(k, edges, mask)][__builtin_popcountll(mask)] += 1;
  return t;
}

// Number of edge subsets S such that (V, S) is connected, by DFS.
inline long long connected_spanning_subgraphs(int k, const std::vector<std::pair<int, int>>& edges) {
  const int m = static_cast<int>(edges.size());
  long long count = 0;
  for (unsigned long long mask = 0; mask < (1ull << m); ++mask) {
    std::vector<std::vector<int>> adj(k);
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) {
        adj[edges[e].first].push_back(edges[e].second);
        adj[edges[e].second].push_back(edges[e].first);
      }
    std::vector<bool> seen(k, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
    }
    count += reached == k;
  }
  return count;
}

// ---- random instances ------------------------------------------------------

inline FqMatrix random_matrix(const FieldCtx& f, int k, int m, std::mt19937_64& rng) {
  FqMatrix out(f, k, m);
  std::uniform_int_distribution<std::uint32_t> dist(0, f.q() - 1);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < m; ++c) out.set(r, c, FieldElem{dist(rng)});
  return out;
}

// Random matrix of rank k (rejection sampling); m >= k.
inline FqMatrix random_full_rank(const FieldCtx& f, int k, int m, std::mt19937_64& rng) {
  for (;;) {
    auto mat = random_matrix(f, k, m, rng);
    if (tutte::rank(mat) == k) return mat;
  }
}

// Random matrix with every column of weight 1 or 2 and rank k.
inline FqMatrix random_wt2(const FieldCtx& f, int k, int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> nz(1, f.q() - 1);
  std::uniform_int_distribution<int> row(0, k - 1);
  for (;;) {
    FqMatrix out(f, k, m);
    for (int c = 0; c < m; ++c) {
      const int u = row(rng);
      out.set(u, c, FieldElem{nz(rng)});
      if (k > 1 && rng() % 4 != 0) {
        int v = row(rng);
        while (v == u) v = row(rng);
        out.set(v, c, FieldElem{nz(rng)});
      }
    }
    if (tutte::rank(out) == k) return out;
  }
}

}  // namespace oracle

#endif  // TUTTE_TESTS_ORACLES_HPP
