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

#include "tutte/gf.hpp"

#include <gtest/gtest.h>

#include <random>
#include <tuple>
#include <vector>

namespace tutte {
namespace {

std::vector<std::pair<unsigned, unsigned>> SmallFields() {
  return {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}};
}

TEST(GfTest, ConstructionExamples) {
  FieldCtx f2(2, 1);
  EXPECT_EQ(f2.q(), 2u);
  EXPECT_EQ(f2.gamma().value, 1u);

  FieldCtx f4(2, 2);
  EXPECT_EQ(f4.q(), 4u);
  EXPECT_EQ(f4.irr(), (std::vector<std::uint32_t>{1, 1, 1}));

  FieldCtx f3(3, 1);
  EXPECT_EQ(f3.gamma().value, 2u);
  EXPECT_EQ(f3.pow(FieldElem{2}, 1), FieldElem{2});
  EXPECT_EQ(f3.pow(FieldElem{2}, 2), FieldElem{1});
}

TEST(GfTest, IrreducibleChoice) {
  // x^3 + x + 1 and x^2 + 1 are the least choices for these orders.
  EXPECT_EQ(FieldCtx(2, 3).irr(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
  EXPECT_EQ(FieldCtx(3, 2).irr(), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(GfTest, Errors) {
  EXPECT_THROW(FieldCtx(4, 1), Error);
  try {
    FieldCtx(9, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotPrime);
  }
  try {
    FieldCtx(2, 32);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
  FieldCtx f5(5, 1);
  try {
    f5.inv(FieldElem{0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DivisionByZero);
  }
  EXPECT_THROW(f5.dlog(FieldElem{0}), Error);
}

TEST(GfTest, ArithmeticExamples) {
  FieldCtx f2(2, 1);
  EXPECT_EQ(f2.mul(FieldElem{1}, FieldElem{1}), FieldElem{1});
  FieldCtx f4(2, 2);
  EXPECT_EQ(f4.mul(FieldElem{2}, FieldElem{2}), FieldElem{3});
  FieldCtx f5(5, 1);
  EXPECT_EQ(f5.inv(FieldElem{2}), FieldElem{3});
  EXPECT_EQ(f5.dlog(FieldElem{4}), 2u);
}

TEST(GfTest, FieldAxiomsExhaustive) {
  for (auto [p, d] : SmallFields()) {
    FieldCtx f(p, d);
    const unsigned q = f.q();
    for (unsigned a = 0; a < q; ++a) {
      const FieldElem x{a};
      EXPECT_EQ(f.add(x, f.neg(x)), f.zero());
      if (a) {
        EXPECT_EQ(f.mul(x, f.inv(x)), f.one()) << f.name() << " a=" << a;
      }
      for (unsigned b = 0; b < q; ++b) {
        const FieldElem y{b};
        ASSERT_EQ(f.add(x, y), f.add(y, x));
        ASSERT_EQ(f.mul(x, y), f.mul(y, x));
        ASSERT_EQ(f.sub(f.add(x, y), y), x);
        // Frobenius.
        ASSERT_EQ(f.pow(f.add(x, y), p), f.add(f.pow(x, p), f.pow(y, p)));
        for (unsigned c = 0; c < q; ++c) {
          const FieldElem z{c};
          ASSERT_EQ(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
          ASSERT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
          ASSERT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
        }
      }
    }
  }
}

TEST(GfTest, ExtensionMultiplicationIsPolynomialProduct) {
  // Schoolbook product of digit vectors reduced by the defining polynomial.
  FieldCtx f(3, 2);
  const auto& irr = f.irr();
  for (unsigned a = 0; a < 9; ++a)
    for (unsigned b = 0; b < 9; ++b) {
      int c[3] = {0, 0, 0};
      const int da[2] = {static_cast<int>(a % 3), static_cast<int>(a / 3)};
      const int db[2] = {static_cast<int>(b % 3), static_cast<int>(b / 3)};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[i + j] += da[i] * db[j];
      for (int i = 0; i < 2; ++i) c[i] -= c[2] * static_cast<int>(irr[i]);
      const unsigned want = static_cast<unsigned>(((c[0] % 3) + 3) % 3 + 3 * (((c[1] % 3) + 3) % 3));
      EXPECT_EQ(f.mul(FieldElem{a}, FieldElem{b}).value, want);
    }
}

TEST(GfTest, GeneratorOrderAndDlogRoundTrip) {
  for (auto [p, d] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}, {2, 8}, {251, 1}, {3, 5}, {7, 2}}) {
    FieldCtx f(p, d);
    EXPECT_EQ(f.order(f.gamma()), f.q() - 1) << f.name();
    EXPECT_EQ(f.dlog(f.gamma()), f.q() == 2 ? 0u : 1u);
    EXPECT_EQ(f.dlog(f.one()), 0u);
    if (f.q() > 256) continue;
    for (unsigned a = 1; a < f.q(); ++a) EXPECT_EQ(f.gamma_pow(f.dlog(FieldElem{a})), FieldElem{a});
    // Least generator: no smaller element has full order.
    for (unsigned g = 1; g < f.gamma().value; ++g) EXPECT_LT(f.order(FieldElem{g}), f.q() - 1);
  }
}

TEST(GfTest, LargeFieldsWithoutTables) {
  // Above the eager table limit arithmetic runs on polynomials and logs are lazy.
  for (auto [p, d] : std::vector<std::pair<unsigned, unsigned>>{{2, 17}, {65537, 1}, {3, 11}, {2, 25}}) {
    FieldCtx f(p, d);
    EXPECT_EQ(f.order(f.gamma()), f.q() - 1);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
      const FieldElem a{static_cast<std::uint32_t>(1 + rng() % (f.q() - 1))};
      const FieldElem b{static_cast<std::uint32_t>(1 + rng() % (f.q() - 1))};
      EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
      EXPECT_EQ(f.gamma_pow(f.dlog(a)), a);
      EXPECT_EQ(f.dlog(f.mul(a, b)), (std::uint64_t{f.dlog(a)} + f.dlog(b)) % (f.q() - 1));
    }
  }
}

TEST(GfTest, EmbedPrimeSubfield) {
  FieldCtx f2(2, 1), f4(2, 2), f3(3, 1);
  EXPECT_EQ(embed(FieldElem{0}, f2, f4), FieldElem{0});
  EXPECT_EQ(embed(FieldElem{1}, f2, f4), FieldElem{1});
  EXPECT_EQ(f4.add(embed(FieldElem{1}, f2, f4), embed(FieldElem{1}, f2, f4)), FieldElem{0});
  try {
    embed(FieldElem{1}, f3, f4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CharMismatch);
  }
}

TEST(GfTest, ExtensionEmbeddingIsHomomorphism) {
  for (auto [p, e, t] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{
           {2, 2, 2}, {2, 2, 3}, {3, 2, 2}, {2, 3, 2}, {5, 1, 2}, {2, 1, 4}}) {
    FieldCtx small(p, e), big(p, e * t);
    FieldEmbedding phi(small, big);
    std::vector<bool> hit(big.q(), false);
    for (unsigned a = 0; a < small.q(); ++a) {
      const FieldElem ia = phi(FieldElem{a});
      EXPECT_FALSE(hit[ia.value]);  // injective
      hit[ia.value] = true;
      for (unsigned b = 0; b < small.q(); ++b) {
        EXPECT_EQ(phi(small.add(FieldElem{a}, FieldElem{b})), big.add(ia, phi(FieldElem{b})));
        EXPECT_EQ(phi(small.mul(FieldElem{a}, FieldElem{b})), big.mul(ia, phi(FieldElem{b})));
      }
    }
    EXPECT_EQ(phi(FieldElem{1}), FieldElem{1});
  }
}

}  // namespace
}  // namespace tutte
