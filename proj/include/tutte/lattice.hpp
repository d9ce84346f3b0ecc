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

// Zeta and Moebius transforms on a product of k chains 0 < 1 < ... < r-1.
//
// A point is a vector in {0..r-1}^k stored at index sum x_i r^i, so
// coordinate 0 is least significant. With r = 2 this is the subset lattice
// (index = bitmask); with r = q it is F_q^k ordered by the integer encoding
// of field elements. The weight of a point is its number of nonzero
// coordinates.
//
// Tables may carry `width` consecutive values per point (a polynomial in an
// auxiliary variable); transforms act on each of them independently. The
// kernels take a weight window [lo, hi]: points above hi are left untouched
// and points below lo are assumed zero. Both restrictions are exact because
// the value of a transform at x depends only on points below x.

#ifndef TUTTE_LATTICE_HPP
#define TUTTE_LATTICE_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "tutte/error.hpp"
#include "tutte/gf.hpp"
#include "tutte/integer.hpp"

namespace tutte {

struct OpCounter {
  std::uint64_t adds = 0;   // transform additions and subtractions
  std::uint64_t mults = 0;  // multiply-accumulate steps in pointwise products

  std::uint64_t total() const { return adds + mults; }
};

class ChainLattice {
 public:
  ChainLattice(int radix, int k) : radix_(radix), k_(k) {
    require(radix >= 2 && k >= 0, Errc::InvalidArgument, "lattice needs radix >= 2");
    std::size_t n = 1;
    for (int i = 0; i < k; ++i) {
      stride_.push_back(n);
      require(n <= (std::size_t{1} << 40) / static_cast<std::size_t>(radix), Errc::TooLarge,
              "lattice too large");
      n *= static_cast<std::size_t>(radix);
    }
    size_ = n;
    weight_.assign(n, 0);
    for (std::size_t x = 1; x < n; ++x) {
      // x and x / radix differ by the lowest digit only.
      weight_[x] = static_cast<std::uint8_t>(weight_[x / radix] + (x % radix != 0));
    }
  }

  int radix() const { return radix_; }
  int k() const { return k_; }
  std::size_t size() const { return size_; }
  std::size_t stride(int i) const { return stride_[i]; }
  int weight(std::size_t x) const { return weight_[x]; }
  int digit(std::size_t x, int i) const {
    return static_cast<int>(x / stride_[i] % static_cast<std::size_t>(radix_));
  }
  /// Support of x as a bitmask over coordinates.
  std::uint64_t support(std::size_t x) const {
    std::uint64_t s = 0;
    for (int i = 0; i < k_; ++i)
      if (digit(x, i)) s |= std::uint64_t{1} << i;
    return s;
  }

 private:
  int radix_;
  int k_;
  std::size_t size_ = 1;
  std::vector<std::size_t> stride_;
  std::vector<std::uint8_t> weight_;
};

namespace kernel {

/// In place: f(x) <- sum_{y <= x} f(y).
template <class T>
void zeta(const ChainLattice& lat, T* f, int width, int lo, int hi, OpCounter* ops = nullptr) {
  const std::size_t n = lat.size();
  const std::size_t r = static_cast<std::size_t>(lat.radix());
  std::uint64_t count = 0;
  for (int i = 0; i < lat.k(); ++i) {
    const std::size_t st = lat.stride(i);
    for (std::size_t x = 0; x < n; ++x) {
      if (x / st % r == 0) continue;
      const int w = lat.weight(x);
      if (w > hi || w < lo) continue;
      T* dst = f + x * width;
      const T* src = f + (x - st) * width;
      for (int c = 0; c < width; ++c) dst[c] += src[c];
      count += static_cast<std::uint64_t>(width);
    }
  }
  if (ops) ops->adds += count;
}

/// In place inverse of zeta.
template <class T>
void moebius(const ChainLattice& lat, T* f, int width, int lo, int hi, OpCounter* ops = nullptr) {
  const std::size_t n = lat.size();
  const std::size_t r = static_cast<std::size_t>(lat.radix());
  std::uint64_t count = 0;
  for (int i = 0; i < lat.k(); ++i) {
    const std::size_t st = lat.stride(i);
    for (std::size_t x = n; x-- > 0;) {
      if (x / st % r == 0) continue;
      const int w = lat.weight(x);
      if (w > hi || w < lo) continue;
      T* dst = f + x * width;
      const T* src = f + (x - st) * width;
      for (int c = 0; c < width; ++c) dst[c] -= src[c];
      count += static_cast<std::uint64_t>(width);
    }
  }
  if (ops) ops->adds += count;
}

/// acc(x) += a(x) * b(x) as truncated polynomials, for points with weight in
/// [lo, hi]. a has width wa, b width wb, acc width wc; only the first
/// da / db coefficients of a / b may be nonzero.
template <class T>
void multiply_accumulate(const ChainLattice& lat, const T* a, int wa, int da, const T* b, int wb,
                         int db, T* acc, int wc, int lo, int hi, OpCounter* ops = nullptr) {
  const std::size_t n = lat.size();
  std::uint64_t count = 0;
  for (std::size_t x = 0; x < n; ++x) {
    const int w = lat.weight(x);
    if (w > hi || w < lo) continue;
    const T* pa = a + x * wa;
    const T* pb = b + x * wb;
    T* pc = acc + x * wc;
    for (int i = 0; i < da && i < wc; ++i) {
      if (pa[i] == 0) continue;
      const int jmax = std::min(db, wc - i);
      for (int j = 0; j < jmax; ++j) pc[i + j] += pa[i] * pb[j];
      count += static_cast<std::uint64_t>(jmax);
    }
  }
  if (ops) ops->mults += count;
}

}  // namespace kernel

// ---- arbitrary-precision tables ----------------------------------------------

struct SubsetTable {
  int k = 0;
  std::vector<BigInt> vals;  // indexed by bitmask

  SubsetTable() = default;
  explicit SubsetTable(int k_) : k(k_), vals(std::size_t{1} << k_) {}
  bool operator==(const SubsetTable&) const = default;
};

struct VectorLatticeTable {
  int q = 2;
  int k = 0;
  std::vector<BigInt> vals;  // indexed by mixed-radix encoding

  VectorLatticeTable() = default;
  VectorLatticeTable(const FieldCtx& ctx, int k_) : VectorLatticeTable(static_cast<int>(ctx.q()), k_) {}
  VectorLatticeTable(int q_, int k_) : q(q_), k(k_), vals(ChainLattice(q_, k_).size()) {}
  bool operator==(const VectorLatticeTable&) const = default;
};

/// Slice l holds the weight-l part of a function on the lattice.
struct RankedTable {
  std::vector<VectorLatticeTable> slices;
};

inline RankedTable rank_split(const VectorLatticeTable& f) {
  const ChainLattice lat(f.q, f.k);
  RankedTable out;
  out.slices.assign(static_cast<std::size_t>(f.k) + 1, VectorLatticeTable(f.q, f.k));
  for (std::size_t x = 0; x < lat.size(); ++x) out.slices[lat.weight(x)].vals[x] = f.vals[x];
  return out;
}

inline VectorLatticeTable zeta_fq(VectorLatticeTable f, OpCounter* ops = nullptr) {
  const ChainLattice lat(f.q, f.k);
  kernel::zeta(lat, f.vals.data(), 1, 0, f.k, ops);
  return f;
}

inline VectorLatticeTable moebius_fq(VectorLatticeTable f, OpCounter* ops = nullptr) {
  const ChainLattice lat(f.q, f.k);
  kernel::moebius(lat, f.vals.data(), 1, 0, f.k, ops);
  return f;
}

/// sum over j of the weight-ell part of f_j v g_{ell-j}, the join taken
/// coordinatewise in the chain order.
inline VectorLatticeTable join_product_ranked(const RankedTable& f, const RankedTable& g, int ell,
                                              OpCounter* ops = nullptr) {
  require(!f.slices.empty() && !g.slices.empty(), Errc::SizeMismatch, "empty ranked table");
  const int q = f.slices[0].q;
  const int k = f.slices[0].k;
  require(f.slices.size() == g.slices.size() && g.slices[0].q == q && g.slices[0].k == k,
          Errc::SizeMismatch, "ranked tables differ in shape");
  require(ell >= 0 && ell <= k, Errc::IndexOutOfRange, "weight outside 0..k");
  const ChainLattice lat(q, k);
  std::vector<BigInt> acc(lat.size());
  for (int j = 0; j <= ell; ++j) {
    if (j >= static_cast<int>(f.slices.size()) || ell - j >= static_cast<int>(g.slices.size())) continue;
    auto a = f.slices[j].vals;
    auto b = g.slices[ell - j].vals;
    const int lo = std::max(j, ell - j);
    kernel::zeta(lat, a.data(), 1, j, ell, ops);
    kernel::zeta(lat, b.data(), 1, ell - j, ell, ops);
    kernel::multiply_accumulate(lat, a.data(), 1, 1, b.data(), 1, 1, acc.data(), 1, lo, ell, ops);
  }
  kernel::moebius(lat, acc.data(), 1, 0, ell, ops);
  VectorLatticeTable out(q, k);
  for (std::size_t x = 0; x < lat.size(); ++x)
    if (lat.weight(x) == ell) out.vals[x] = acc[x];
  return out;
}

/// h(U) = sum_{W subset U} f(W) g(U \ W), by ranked zeta transforms.
inline SubsetTable subset_convolve(const SubsetTable& f, const SubsetTable& g, OpCounter* ops = nullptr) {
  require(f.k == g.k && f.vals.size() == g.vals.size(), Errc::SizeMismatch,
          "subset tables differ in size");
  const int k = f.k;
  const ChainLattice lat(2, k);
  const std::size_t n = lat.size();
  auto ranked = [&](const SubsetTable& t) {
    std::vector<std::vector<BigInt>> out(k + 1, std::vector<BigInt>(n));
    for (std::size_t x = 0; x < n; ++x) out[lat.weight(x)][x] = t.vals[x];
    for (int r = 0; r <= k; ++r) kernel::zeta(lat, out[r].data(), 1, r, k, ops);
    return out;
  };
  const auto fr = ranked(f);
  const auto gr = ranked(g);
  SubsetTable h(k);
  std::vector<BigInt> acc(n);
  for (int l = 0; l <= k; ++l) {
    std::fill(acc.begin(), acc.end(), BigInt(0));
    for (int j = 0; j <= l; ++j)
      kernel::multiply_accumulate(lat, fr[j].data(), 1, 1, gr[l - j].data(), 1, 1, acc.data(), 1,
                                  std::max(j, l - j), l, ops);
    kernel::moebius(lat, acc.data(), 1, 0, l, ops);
    for (std::size_t x = 0; x < n; ++x)
      if (lat.weight(x) == l) h.vals[x] = acc[x];
  }
  return h;
}

}  // namespace tutte

#endif  // TUTTE_LATTICE_HPP
