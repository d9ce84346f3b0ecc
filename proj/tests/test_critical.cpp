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


#include "tutte/critical.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"

namespace tutte {
namespace {

std::vector<std::uint32_t> Digits(long long x, std::uint32_t q, int k) {
  std::vector<std::uint32_t> d(k);
  for (int i = 0; i < k; ++i, x /= q) d[i] = static_cast<std::uint32_t>(x % q);
  return d;
}

// Codewords from explicit products, then d-tuples over the full message space.
long long NaiveTupleCount(const FqMatrix& g, int d) {
  const auto& f = g.ctx();
  const int k = g.k(), m = g.m();
  long long n = 1;
  for (int i = 0; i < k; ++i) n *= f.q();
  std::vector<std::vector<bool>> nonzero(n, std::vector<bool>(m));
  for (long long x = 0; x < n; ++x) {
    const auto dig = Digits(x, f.q(), k);
    for (int c = 0; c < m; ++c) {
      FieldElem s = f.zero();
      for (int r = 0; r < k; ++r) s = f.add(s, f.mul(FieldElem{dig[r]}, g.at(r, c)));
      nonzero[x][c] = s.value != 0;
    }
  }
  long long total = 0;
  long long tuples = 1;
  for (int i = 0; i < d; ++i) tuples *= n;
  for (long long t = 0; t < tuples; ++t) {
    std::vector<bool> cover(m, false);
    long long rest = t;
    for (int i = 0; i < d; ++i, rest /= n)
      for (int c = 0; c < m; ++c) cover[c] = cover[c] || nonzero[rest % n][c];
    total += std::all_of(cover.begin(), cover.end(), [](bool b) { return b; });
  }
  return total;
}

TEST(CriticalTest, FullSupportExamples) {
  FieldCtx f2(2, 1), f3(3, 1);
  EXPECT_EQ(count_full_support(LinearCode(FqMatrix::from_rows(f2, {{1}}))), 1);
  EXPECT_EQ(count_full_support(LinearCode(FqMatrix::from_rows(f2, {{1, 0}, {0, 1}}))), 1);
  EXPECT_EQ(count_full_support(LinearCode(FqMatrix::from_rows(f3, {{1, 1}}))), 2);
  EXPECT_THROW(LinearCode(FqMatrix::from_rows(f2, {{1, 1}, {1, 1}})), Error);
  try {
    count_full_support(LinearCode(FqMatrix::from_rows(FieldCtx(2, 12), {{1, 0}, {0, 1}})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
}

TEST(CriticalTest, TupleExamples) {
  FieldCtx f2(2, 1);
  LinearCode one(FqMatrix::from_rows(f2, {{1}}));
  EXPECT_EQ(count_full_support_tuples(one, 2), NaiveTupleCount(one.gen(), 2));
  EXPECT_EQ(count_full_support_tuples(one, 2), 3);
  LinearCode id(FqMatrix::from_rows(f2, {{1, 0}, {0, 1}}));
  EXPECT_EQ(count_full_support_tuples(id, 2), 9);
  EXPECT_EQ(count_full_support_tuples(id, 1), count_full_support(id));
  auto ext = extension_code(id, 2);
  EXPECT_EQ(ext.ctx().q(), 4u);
}

TEST(CriticalTest, VerifyExamples) {
  FieldCtx f2(2, 1);
  LinearCode one(FqMatrix::from_rows(f2, {{1}}));
  auto r1 = verify_critical(one, 1, TutteAlgorithm::Definition);
  EXPECT_TRUE(r1.pass);
  EXPECT_EQ(r1.count, 1);
  auto r2 = verify_critical(one, 2, TutteAlgorithm::General);
  EXPECT_TRUE(r2.pass);
  EXPECT_EQ(r2.evaluation, 3);
  LinearCode tri(graphic_matroid(3, {{0, 1}, {1, 2}, {0, 2}}));
  auto r3 = verify_critical(tri, 1, TutteAlgorithm::Wt2);
  EXPECT_TRUE(r3.pass);
  EXPECT_EQ(r3.count, 0);
  EXPECT_EQ(r3.count, NaiveTupleCount(tri.gen(), 1));
  // A wrong polynomial must be caught.
  auto bad = r3.poly;
  bad.coeff[{1, 0}] += 1;
  EXPECT_FALSE(verify_critical_with(tri, 1, bad).pass);
}

TEST(CriticalTest, RoutesAgreeWithNaiveCount) {
  std::mt19937_64 rng(71);
  for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}}) {
    FieldCtx f(p, e);
    for (int t = 0; t < 6; ++t) {
      const int k = 1 + static_cast<int>(rng() % 3);
      const int m = k + static_cast<int>(rng() % 4);
      LinearCode code(oracle::random_full_rank(f, k, m, rng));
      for (int d = 1; d <= 2; ++d) {
        if (std::pow(f.q(), 2 * k * d) > 3e6) continue;
        auto routes = full_support_tuple_routes(code, d);
        const long long want = NaiveTupleCount(code.gen(), d);
        EXPECT_EQ(routes.direct, want);
        EXPECT_EQ(routes.extension, want);
      }
    }
  }
}

TEST(CriticalTest, CountsMatchForEveryAlgorithm) {
  std::mt19937_64 rng(73);
  for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}}) {
    FieldCtx f(p, e);
    for (int t = 0; t < 8; ++t) {
      const int k = 1 + static_cast<int>(rng() % 3);
      const int m = k + static_cast<int>(rng() % 5);
      const bool wt2 = t % 2 == 0;
      FqMatrix g = wt2 ? oracle::random_wt2(f, k, m, rng) : oracle::random_full_rank(f, k, m, rng);
      LinearCode code(g);
      for (int d = 1; d <= 2; ++d) {
        for (auto algo : {TutteAlgorithm::Definition, TutteAlgorithm::General, TutteAlgorithm::Wt2}) {
          if (!algorithm_applies(algo, g)) continue;
          auto rep = verify_critical(code, d, algo);
          EXPECT_TRUE(rep.pass) << algorithm_name(algo) << " d=" << d;
        }
      }
    }
  }
}

TEST(CriticalTest, FullSupportBoundedByOneCoordinate) {
  std::mt19937_64 rng(79);
  FieldCtx f3(3, 1);
  for (int t = 0; t < 10; ++t) {
    const int k = 1 + static_cast<int>(rng() % 4);
    LinearCode code(oracle::random_full_rank(f3, k, k + 2, rng));
    BigInt bound = 2 * pow_big(3, static_cast<unsigned>(k - 1));
    EXPECT_LE(count_full_support(code), bound);
  }
}

TEST(CriticalTest, ThreadedCountMatches) {
  std::mt19937_64 rng(83);
  FieldCtx f5(5, 1);
  LinearCode code(oracle::random_full_rank(f5, 4, 7, rng));
  EXPECT_EQ(count_full_support(code, 3), count_full_support(code));
}

}  // namespace
}  // namespace tutte
