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

#include "tutte/wt2.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace tutte {
namespace {

// Edge lists and component counts straight from the matrix.
struct Direct {
  const FqMatrix& mat;

  std::vector<int> rows_of(int c) const {
    std::vector<int> r;
    for (int i = 0; i < mat.k(); ++i)
      if (mat.at(i, c).value) r.push_back(i);
    return r;
  }

  bool inside(int c, unsigned u) const {
    for (int r : rows_of(c))
      if (!(u >> r & 1)) return false;
    return true;
  }

  int components(unsigned u, const std::vector<int>& cols, unsigned long long pick) const {
    oracle::UnionFind uf(mat.k());
    int comps = __builtin_popcount(u);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (!(pick >> i & 1)) continue;
      const auto r = rows_of(cols[i]);
      if (r.size() == 2) comps -= uf.unite(r[0], r[1]);
    }
    return comps;
  }

  // counts[d][s] over subsets of `cols` spanning u.
  std::vector<std::vector<long long>> count(unsigned u, const std::vector<int>& cols) const {
    std::vector<std::vector<long long>> out(mat.k() + 1, std::vector<long long>(mat.m() + 1, 0));
    for (unsigned long long pick = 0; pick < (1ull << cols.size()); ++pick)
      ++out[components(u, cols, pick)][__builtin_popcountll(pick)];
    return out;
  }
};

TEST(Wt2Test, MultigraphRejectsBadColumns) {
  FieldCtx f2(2, 1);
  try {
    Multigraph::from_matrix(FqMatrix::from_rows(f2, {{1}, {1}, {1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::WeightTooHigh);
  }
  try {
    Multigraph::from_matrix(FqMatrix::from_rows(f2, {{1, 0}, {0, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroColumn);
  }
}

TEST(Wt2Test, EdgeCountExamples) {
  FieldCtx f3(3, 1);
  // A loop at vertex 0 never lies in a hyperplane with h(0) != 0.
  auto g = Multigraph::from_matrix(FqMatrix::from_rows(f3, {{2}}));
  auto c = edge_counts(g);
  EXPECT_EQ(c.subset[1], 1);
  EXPECT_EQ(c.hyper[1], 0);
  EXPECT_EQ(c.hyper[2], 0);
  FieldCtx f2(2, 1);
  auto e = Multigraph::from_matrix(FqMatrix::from_rows(f2, {{1}, {1}}));
  EXPECT_EQ(edge_counts(e).hyper[3], 1);
}

TEST(Wt2Test, EdgeCountsMatchDirectRecount) {
  std::mt19937_64 rng(41);
  FieldCtx f3(3, 1);
  for (int t = 0; t < 5; ++t) {
    auto mat = oracle::random_wt2(f3, 4, 7, rng);
    Direct dir{mat};
    auto c = edge_counts(Multigraph::from_matrix(mat));
    const ChainLattice lat(3, 4);
    for (std::size_t x = 1; x < lat.size(); ++x) {
      const unsigned u = static_cast<unsigned>(lat.support(x));
      int want = 0;
      for (int col = 0; col < mat.m(); ++col) {
        if (!dir.inside(col, u)) continue;
        FieldElem dot{0};
        for (int r = 0; r < 4; ++r)
          dot = f3.add(dot, f3.mul(FieldElem{static_cast<std::uint32_t>(lat.digit(x, r))}, mat.at(r, col)));
        want += dot.value == 0;
      }
      EXPECT_EQ(c.hyper[x], want);
    }
  }
}

TEST(Wt2Test, AlphaExamples) {
  FieldCtx f2(2, 1);
  // Two isolated vertices: one loop on each keeps the matrix free of zero columns.
  auto iso = alpha_tables(Multigraph::from_matrix(FqMatrix::from_rows(f2, {{1, 0}, {0, 1}})));
  EXPECT_EQ(iso.at(2, 3, 0), 1);
  EXPECT_EQ(iso.at(1, 3, 0), 0);
  auto edge = alpha_tables(Multigraph::from_matrix(FqMatrix::from_rows(f2, {{1}, {1}})));
  EXPECT_EQ(edge.at(1, 3, 1), 1);
  EXPECT_EQ(edge.at(2, 3, 0), 1);
  auto tri = alpha_tables(Multigraph::from_matrix(from_graph(3, {{0, 1}, {1, 2}, {0, 2}})));
  EXPECT_EQ(tri.at(1, 7, 2), 3);
  EXPECT_EQ(tri.at(1, 7, 3), 1);
}

TEST(Wt2Test, AlphaAndAlphaHMatchEnumeration) {
  std::mt19937_64 rng(43);
  for (auto [p, d] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    FieldCtx f(p, d);
    for (int t = 0; t < 3; ++t) {
      const int k = 2 + t;
      auto mat = oracle::random_wt2(f, k, 6, rng);
      auto g = Multigraph::from_matrix(mat);
      Direct dir{mat};
      auto alpha = alpha_tables(g);
      for (unsigned u = 1; u < (1u << k); ++u) {
        std::vector<int> cols;
        for (int c = 0; c < mat.m(); ++c)
          if (dir.inside(c, u)) cols.push_back(c);
        auto want = dir.count(u, cols);
        for (int dd = 1; dd <= k; ++dd)
          for (int s = 0; s <= mat.m(); ++s) ASSERT_EQ(alpha.at(dd, u, s), want[dd][s]);
      }
      auto alphah = alpha_h_tables(g);
      const ChainLattice lat(static_cast<int>(f.q()), k);
      for (std::size_t x = 1; x < lat.size(); ++x) {
        const unsigned u = static_cast<unsigned>(lat.support(x));
        std::vector<int> cols;
        for (int c = 0; c < mat.m(); ++c) {
          if (!dir.inside(c, u)) continue;
          FieldElem dot{0};
          for (int r = 0; r < k; ++r)
            dot = f.add(dot, f.mul(FieldElem{static_cast<std::uint32_t>(lat.digit(x, r))}, mat.at(r, c)));
          if (dot.value == 0) cols.push_back(c);
        }
        auto want = dir.count(u, cols);
        for (int dd = 1; dd <= k; ++dd)
          for (int s = 0; s <= mat.m(); ++s) ASSERT_EQ(alphah.at(dd, x, s), want[dd][s]);
        for (int s = 0; s <= mat.m(); ++s) {
          BigInt sum = 0;
          for (int dd = 1; dd <= k; ++dd) sum += alphah.at(dd, x, s);
          EXPECT_EQ(sum, binomial(static_cast<int>(cols.size()), s));
        }
      }
    }
  }
}

TEST(Wt2Test, BetaExamples) {
  FieldCtx f2(2, 1);
  // Vertex 1 carries a loop; vertex 0 is covered by an edge to vertex 1.
  auto mat = FqMatrix::from_rows(f2, {{1, 0}, {1, 1}});
  auto g = Multigraph::from_matrix(mat);
  auto beta = beta_tables(g, alpha_tables(g), alpha_h_tables(g));
  EXPECT_EQ(beta.ii(1, 0), 1);  // isolated vertex {0}
  EXPECT_EQ(beta.i(1, 0), 0);
  EXPECT_EQ(beta.ii(3, 1), 1);  // the edge alone has rank 1 = |U| - 1
  EXPECT_EQ(beta.i(3, 1), 0);
  EXPECT_EQ(beta.i(3, 2), 1);   // edge plus loop has full rank
}

TEST(Wt2Test, BetaMatchesRankOracle) {
  std::mt19937_64 rng(47);
  for (auto [p, d] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    FieldCtx f(p, d);
    for (int t = 0; t < 3; ++t) {
      const int k = 2 + t;
      auto mat = oracle::random_wt2(f, k, 6, rng);
      auto g = Multigraph::from_matrix(mat);
      auto alpha = alpha_tables(g);
      auto beta = beta_tables(g, alpha, alpha_h_tables(g));
      Direct dir{mat};
      for (unsigned u = 1; u < (1u << k); ++u) {
        std::vector<int> cols;
        for (int c = 0; c < mat.m(); ++c)
          if (dir.inside(c, u)) cols.push_back(c);
        std::vector<long long> full(mat.m() + 1, 0), deficient(mat.m() + 1, 0);
        for (unsigned long long pick = 0; pick < (1ull << cols.size()); ++pick) {
          if (dir.components(u, cols, pick) != 1) continue;
          std::vector<int> chosen;
          for (std::size_t i = 0; i < cols.size(); ++i)
            if (pick >> i & 1) chosen.push_back(cols[i]);
          const int r = oracle::minor_rank(mat, chosen);
          const int s = static_cast<int>(chosen.size());
          if (r == __builtin_popcount(u)) ++full[s];
          else if (r == __builtin_popcount(u) - 1) ++deficient[s];
          else FAIL() << "connected component rank out of range";
        }
        for (int s = 0; s <= mat.m(); ++s) {
          ASSERT_EQ(beta.ii(u, s), deficient[s]);
          ASSERT_EQ(beta.i(u, s), full[s]);
          ASSERT_EQ(beta.i(u, s) + beta.ii(u, s), alpha.at(1, u, s));
        }
      }
    }
  }
}

TEST(Wt2Test, FactorizedTauMatchesSigmaRecurrence) {
  std::mt19937_64 rng(53);
  for (auto [p, d] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}}) {
    FieldCtx f(p, d);
    for (int t = 0; t < 4; ++t) {
      const int k = 2 + t % 3;
      auto mat = oracle::random_wt2(f, k, 7, rng);
      auto g = Multigraph::from_matrix(mat);
      auto beta = beta_tables(g, alpha_tables(g), alpha_h_tables(g));
      auto sig = sigma_tables(beta);
      auto tau = sigma_and_tau(g, beta);
      const std::size_t full = (1u << k) - 1;
      RankSizeTable want(k, mat.m());
      for (int r = 0; r <= k; ++r)
        for (int s = 0; s <= mat.m(); ++s)
          for (int d1 = 0; d1 <= k; ++d1) want.tau[r][s] += sig[d1][k - r][full * (mat.m() + 1) + s];
      EXPECT_EQ(tau, want);
      EXPECT_EQ(tau, tutte_bruteforce(mat));
    }
  }
}

TEST(Wt2Test, KnownPolynomials) {
  FieldCtx f2(2, 1);
  auto id = FqMatrix::from_rows(f2, {{1, 0}, {0, 1}});
  EXPECT_EQ(to_string(tau_to_tutte(tutte_wt2(id), true)), "x^2");
  auto edge = FqMatrix::from_rows(f2, {{1}, {1}});
  EXPECT_THROW(tutte_wt2(edge), Error);  // rank 1 < k = 2
  auto coloop = FqMatrix::from_rows(f2, {{1}});
  EXPECT_EQ(to_string(tau_to_tutte(tutte_wt2(coloop), true)), "x");
  auto tri = graphic_matroid(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(to_string(tau_to_tutte(tutte_wt2(tri), true)), "x^2 + x + y");
}

TEST(Wt2Test, MatchesBruteForceOnRandomInputs) {
  std::mt19937_64 rng(59);
  const long long before = exactness_stats().violations;
  for (auto [p, d] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    FieldCtx f(p, d);
    for (int t = 0; t < 10; ++t) {
      const int k = 1 + static_cast<int>(rng() % 5);
      const int m = k + static_cast<int>(rng() % (11 - k));
      auto mat = oracle::random_wt2(f, k, m, rng);
      Wt2Stats st;
      ASSERT_EQ(tutte_wt2(mat, &st), tutte_bruteforce(mat));
      EXPECT_TRUE(st.machine_integers);
    }
  }
  EXPECT_EQ(exactness_stats().violations, before);
}

TEST(Wt2Test, BigIntegerPathAgrees) {
  std::mt19937_64 rng(61);
  FieldCtx f3(3, 1);
  for (int t = 0; t < 3; ++t) {
    auto mat = oracle::random_wt2(f3, 3, 8, rng);
    auto g = Multigraph::from_matrix(mat);
    EXPECT_EQ(detail::run_wt2<BigInt>(g, nullptr), detail::run_wt2<Int128>(g, nullptr));
  }
}

TEST(Wt2Test, GraphicConnectedSubgraphCounts) {
  // For graphs over GF(2), alpha[1] at V counts connected spanning subgraphs.
  std::mt19937_64 rng(67);
  for (int t = 0; t < 8; ++t) {
    const int k = 3 + static_cast<int>(rng() % 4);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < k; ++v) edges.emplace_back(static_cast<int>(rng() % v), v);
    while (static_cast<int>(edges.size()) < 12) {
      const int a = static_cast<int>(rng() % k), b = static_cast<int>(rng() % k);
      if (a != b) edges.emplace_back(a, b);
    }
    auto alpha = alpha_tables(Multigraph::from_matrix(from_graph(k, edges)));
    BigInt total = 0;
    for (int s = 0; s <= 12; ++s) total += alpha.at(1, (1u << k) - 1, s);
    EXPECT_EQ(total, oracle::connected_spanning_subgraphs(k, edges));
  }
}

}  // namespace
}  // namespace tutte
