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

// Rank-size tables of matrices whose columns have at most two nonzero
// entries.
//
// Rows are vertices and columns are edges of a multigraph (a weight-1 column
// is a loop). For a vertex set U, E[U] is the set of edges inside U. A
// connected spanning subgraph (U, S) has rank |U| (type i) or |U| - 1
// (type ii); type ii happens exactly when all of S lies in a hyperplane
// sum_v h(v) x_v = 0 with h nonzero on all of U, and h is then unique up to
// scaling.
//
// Counts are kept as polynomials in the edge count s:
//
//   alpha[d](U)  spanning subgraphs of (U, E[U]) with d components,
//   alphah[d](h) the same restricted to E[U]^h = {e in E[U] : h . M[e] = 0}
//                where h ranges over vectors with support exactly U,
//   beta_ii(U) = sum_{supp h = U} alphah[1](h) / (q - 1),
//   beta_i(U)  = alpha[1](U) - beta_ii(U).
//
// Both alpha tables come from the same level-by-level recurrence
//
//   g_d = (1/d) sum_j [g_1]_j v [g_{d-1}]_{l-j}      (weight-l part, d >= 2)
//   g_1 = C(|E|, s) - sum_{d >= 2} g_d,
//
// evaluated with ranked zeta transforms on the lattice {0..r-1}^k (r = 2 for
// subsets, r = q for hyperplane vectors). Finally, if A(W) counts subgraphs
// of W whose components are all of type i and C_d(W) those with exactly d
// components all of type ii (both again by the peeling recurrence),
//
//   tau[k - d][s] = sum_{W subset V} (A(W) * C_d(V \ W))[s].

#ifndef TUTTE_WT2_HPP
#define TUTTE_WT2_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

#include "tutte/error.hpp"
#include "tutte/gf.hpp"
#include "tutte/integer.hpp"
#include "tutte/lattice.hpp"
#include "tutte/matroid.hpp"
#include "tutte/tutte_core.hpp"

namespace tutte {

struct Multigraph {
  struct Edge {
    int u = 0;
    int v = 0;  // equals u for a loop
    FieldElem mu{0};
    FieldElem mv{0};  // zero for a loop
    bool loop() const { return u == v; }
  };

  FieldCtx ctx{2, 1};
  int k = 0;
  std::vector<Edge> edges;

  static Multigraph from_matrix(const FqMatrix& mat) {
    Multigraph g;
    g.ctx = mat.ctx();
    g.k = mat.k();
    require(g.k <= 62, Errc::TooLarge, "too many rows for vertex bitmasks");
    for (int c = 0; c < mat.m(); ++c) {
      std::vector<int> rows;
      for (int r = 0; r < mat.k(); ++r)
        if (mat.at(r, c).value) rows.push_back(r);
      require(!rows.empty(), Errc::ZeroColumn, "column " + std::to_string(c) + " is all zero");
      require(rows.size() <= 2, Errc::WeightTooHigh,
              "column " + std::to_string(c) + " has weight " + std::to_string(rows.size()));
      Edge e;
      e.u = rows[0];
      e.mu = mat.at(rows[0], c);
      if (rows.size() == 2) {
        e.v = rows[1];
        e.mv = mat.at(rows[1], c);
      } else {
        e.v = e.u;
      }
      g.edges.push_back(e);
    }
    return g;
  }

  int m() const { return static_cast<int>(edges.size()); }
  std::uint64_t endpoints(const Edge& e) const {
    return (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
  }
};

struct EdgeCounts {
  std::vector<int> subset;  // |E[U]| by bitmask U
  std::vector<int> hyper;   // |E[U]^h| by lattice index of h; 0 at h = 0
};

inline EdgeCounts edge_counts(const Multigraph& g) {
  const ChainLattice sub(2, g.k);
  const ChainLattice vec(static_cast<int>(g.ctx.q()), g.k);
  EdgeCounts out;
  out.subset.assign(sub.size(), 0);
  for (const auto& e : g.edges) ++out.subset[g.endpoints(e)];
  kernel::zeta(sub, out.subset.data(), 1, 0, g.k);
  out.hyper.assign(vec.size(), 0);
  std::vector<std::size_t> stride(g.k);
  for (int i = 0; i < g.k; ++i) stride[i] = vec.stride(i);
  const auto q = static_cast<std::size_t>(g.ctx.q());
  for (std::size_t x = 1; x < vec.size(); ++x) {
    int count = 0;
    for (const auto& e : g.edges) {
      if (e.loop()) continue;  // h(v) m_ve is never zero
      const FieldElem hu{static_cast<std::uint32_t>(x / stride[e.u] % q)};
      const FieldElem hv{static_cast<std::uint32_t>(x / stride[e.v] % q)};
      if (!hu.value || !hv.value) continue;
      if (g.ctx.add(g.ctx.mul(hu, e.mu), g.ctx.mul(hv, e.mv)).value == 0) ++count;
    }
    out.hyper[x] = count;
  }
  return out;
}

/// Component counts g[d] (d = 1..k) on a chain lattice, as polynomials in s
/// of width m + 1 at every point. g[0] is unused.
struct ComponentTables {
  int radix = 2;
  int k = 0;
  int m = 0;
  std::vector<std::vector<BigInt>> g;

  const BigInt& at(int d, std::size_t x, int s) const {
    return g.at(d).at(x * static_cast<std::size_t>(m + 1) + s);
  }
};

struct BetaTables {
  int k = 0;
  int m = 0;
  std::vector<BigInt> beta_i;   // index U * (m + 1) + s
  std::vector<BigInt> beta_ii;

  const BigInt& i(std::uint64_t u, int s) const { return beta_i.at(u * (m + 1) + s); }
  const BigInt& ii(std::uint64_t u, int s) const { return beta_ii.at(u * (m + 1) + s); }
};

struct Wt2Stats {
  OpCounter ops;
  bool machine_integers = false;  // 128-bit path chosen by the magnitude bound
  double log2_bound = 0;
};

namespace detail {

template <class T>
class Wt2Engine {
 public:
  Wt2Engine(const Multigraph& g, OpCounter* ops)
      : g_(g), k_(g.k), m_(g.m()), w_(g.m() + 1), sub_(2, g.k),
        vec_(static_cast<int>(g.ctx.q()), g.k), counts_(edge_counts(g)), binom_(g.m()), ops_(ops) {}

  const EdgeCounts& counts() const { return counts_; }

  enum class Mode { kConnected, kExponential };

  // Peeling recurrence; see the header comment. In connected mode `base`
  // holds edge counts per point; in exponential mode `given` is g_1.
  std::vector<std::vector<T>> component_dp(const ChainLattice& lat, Mode mode,
                                           const std::vector<int>& edges,
                                           const std::vector<T>* given) const {
    const int k = lat.k();
    const std::size_t n = lat.size();
    std::vector<int> deg(k + 1, 0);  // per-weight maximum of |E|, the degree bound in s
    for (std::size_t x = 0; x < n; ++x) deg[lat.weight(x)] = std::max(deg[lat.weight(x)], edges[x]);
    std::vector<std::vector<T>> g(k + 1, std::vector<T>(n * w_));
    std::vector<std::vector<T>> acc(k + 1);
    std::vector<T> z1, z2;
    for (int l = 1; l <= k; ++l) {
      const int wl = deg[l] + 1;
      for (int d = 2; d <= l; ++d) acc[d].assign(n * wl, T(0));
      for (int j = 1; j < l; ++j) {
        const int wt = l - j;
        const int w1 = deg[j] + 1;
        const int w2 = deg[wt] + 1;
        slice(lat, g[1], j, w1, z1);
        kernel::zeta(lat, z1.data(), w1, j, l, ops_);
        for (int dp = 1; dp <= wt; ++dp) {
          slice(lat, g[dp], wt, w2, z2);
          kernel::zeta(lat, z2.data(), w2, wt, l, ops_);
          kernel::multiply_accumulate(lat, z1.data(), w1, w1, z2.data(), w2, w2, acc[dp + 1].data(),
                                      wl, std::max(j, wt), l, ops_);
        }
      }
      const int lo = (l + 1) / 2;
      for (int d = 2; d <= l; ++d) {
        kernel::moebius(lat, acc[d].data(), wl, lo, l, ops_);
        for (std::size_t x = 0; x < n; ++x) {
          if (lat.weight(x) != l) continue;
          for (int s = 0; s < wl; ++s)
            g[d][x * w_ + s] = exact_div(acc[d][x * wl + s], d, "component peeling");
        }
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (lat.weight(x) != l) continue;
        for (int s = 0; s <= m_; ++s) {
          T v;
          if (mode == Mode::kConnected) {
            v = binom_(edges[x], s);
            for (int d = 2; d <= l; ++d) v -= g[d][x * w_ + s];
          } else {
            v = (*given)[x * w_ + s];
          }
          g[1][x * w_ + s] = v;
        }
      }
    }
    return g;
  }

  std::vector<std::vector<T>> alpha() const {
    return component_dp(sub_, Mode::kConnected, counts_.subset, nullptr);
  }

  std::vector<std::vector<T>> alpha_h() const {
    return component_dp(vec_, Mode::kConnected, counts_.hyper, nullptr);
  }

  // beta_ii then beta_i, indexed U * w + s.
  std::pair<std::vector<T>, std::vector<T>> beta(const std::vector<T>& alpha1,
                                                 const std::vector<T>& alphah1) const {
    std::vector<T> agg(sub_.size() * w_);
    for (std::size_t x = 1; x < vec_.size(); ++x) {
      const std::uint64_t u = vec_.support(x);
      for (int s = 0; s <= m_; ++s) agg[u * w_ + s] += alphah1[x * w_ + s];
    }
    const long long qm1 = static_cast<long long>(g_.ctx.q()) - 1;
    std::vector<T> bii(sub_.size() * w_), bi(sub_.size() * w_);
    for (std::size_t u = 1; u < sub_.size(); ++u) {
      for (int s = 0; s <= m_; ++s) {
        bii[u * w_ + s] = exact_div(agg[u * w_ + s], qm1, "hyperplane aggregation");
        bi[u * w_ + s] = alpha1[u * w_ + s] - bii[u * w_ + s];
        require(bi[u * w_ + s] >= 0, Errc::InternalError, "negative full-rank component count");
      }
    }
    return {std::move(bii), std::move(bi)};
  }

  RankSizeTable tau(const std::vector<T>& bii, const std::vector<T>& bi) const {
    const std::size_t n = sub_.size();
    const auto ga = component_dp(sub_, Mode::kExponential, counts_.subset, &bi);
    const auto gc = component_dp(sub_, Mode::kExponential, counts_.subset, &bii);
    // A(W) = sum_d ga[d](W), with A(empty) = 1.
    std::vector<T> a(n * w_);
    a[0] = 1;
    for (std::size_t x = 1; x < n; ++x)
      for (int d = 1; d <= k_; ++d)
        for (int s = 0; s <= m_; ++s) a[x * w_ + s] += ga[d][x * w_ + s];
    RankSizeTable out(k_, m_);
    const std::size_t full = n - 1;
    for (int d = 0; d <= k_; ++d) {
      std::vector<T> row(w_);
      for (std::size_t wset = 0; wset < n; ++wset) {
        const std::size_t rest = full & ~wset;
        const T* pc = nullptr;
        if (d == 0) {
          if (rest != 0) continue;
        } else {
          if (rest == 0) continue;
          pc = gc[d].data() + rest * w_;
        }
        const T* pa = a.data() + wset * w_;
        for (int s1 = 0; s1 <= m_; ++s1) {
          if (pa[s1] == 0) continue;
          if (d == 0) {
            row[s1] += pa[s1];
            continue;
          }
          for (int s2 = 0; s1 + s2 <= m_; ++s2) row[s1 + s2] += pa[s1] * pc[s2];
          if (ops_) ops_->mults += static_cast<std::uint64_t>(m_ - s1 + 1);
        }
      }
      for (int s = 0; s <= m_; ++s) out.tau[k_ - d][s] = to_big(row[s]);
    }
    return out;
  }

  const ChainLattice& subsets() const { return sub_; }
  const ChainLattice& vectors() const { return vec_; }

 private:
  // Copies the weight-`weight` part of g (width w_) into out with width w.
  void slice(const ChainLattice& lat, const std::vector<T>& g, int weight, int w, std::vector<T>& out) const {
    const std::size_t n = lat.size();
    out.assign(n * w, T(0));
    for (std::size_t x = 0; x < n; ++x) {
      if (lat.weight(x) != weight) continue;
      for (int s = 0; s < w; ++s) out[x * w + s] = g[x * w_ + s];
    }
  }

  const Multigraph& g_;
  int k_;
  int m_;
  int w_;
  ChainLattice sub_;
  ChainLattice vec_;
  EdgeCounts counts_;
  BinomialTable<T> binom_;
  OpCounter* ops_;
};

template <class T>
std::vector<BigInt> to_big_vec(const std::vector<T>& v) {
  std::vector<BigInt> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_big(v[i]);
  return out;
}

inline ComponentTables to_tables(int radix, int k, int m, const std::vector<std::vector<BigInt>>& g) {
  ComponentTables t;
  t.radix = radix;
  t.k = k;
  t.m = m;
  t.g = g;
  return t;
}

}  // namespace detail

/// alpha[d][s](U) for all U; exact.
inline ComponentTables alpha_tables(const Multigraph& g, OpCounter* ops = nullptr) {
  detail::Wt2Engine<BigInt> eng(g, ops);
  return detail::to_tables(2, g.k, g.m(), eng.alpha());
}

/// alphah[d][s](h) for all h in F_q^k.
inline ComponentTables alpha_h_tables(const Multigraph& g, OpCounter* ops = nullptr) {
  detail::Wt2Engine<BigInt> eng(g, ops);
  return detail::to_tables(static_cast<int>(g.ctx.q()), g.k, g.m(), eng.alpha_h());
}

inline BetaTables beta_tables(const Multigraph& g, const ComponentTables& alpha,
                              const ComponentTables& alpha_h) {
  require(alpha.k == g.k && alpha_h.k == g.k && alpha.radix == 2 &&
              alpha_h.radix == static_cast<int>(g.ctx.q()),
          Errc::SizeMismatch, "tables do not match the multigraph");
  detail::Wt2Engine<BigInt> eng(g, nullptr);
  auto [bii, bi] = eng.beta(alpha.g[1], alpha_h.g[1]);
  BetaTables out;
  out.k = g.k;
  out.m = g.m();
  out.beta_i = std::move(bi);
  out.beta_ii = std::move(bii);
  return out;
}

/// Rank-size table from the component-type counts.
inline RankSizeTable sigma_and_tau(const Multigraph& g, const BetaTables& beta, OpCounter* ops = nullptr) {
  require(beta.k == g.k && beta.m == g.m(), Errc::SizeMismatch, "beta tables do not match");
  detail::Wt2Engine<BigInt> eng(g, ops);
  return eng.tau(beta.beta_ii, beta.beta_i);
}

/// sigma[d1][d2][U * (m + 1) + s] by the two-sided peeling recurrence, with
/// plain enumeration of sub-vertex-sets. Reference implementation for small k.
inline std::vector<std::vector<std::vector<BigInt>>> sigma_tables(const BetaTables& beta) {
  const int k = beta.k;
  const int w = beta.m + 1;
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::vector<std::vector<BigInt>>> sig(
      k + 1, std::vector<std::vector<BigInt>>(k + 1, std::vector<BigInt>(n * w)));
  std::vector<std::size_t> order(n);
  for (std::size_t u = 0; u < n; ++u) order[u] = u;
  std::stable_sort(order.begin(), order.end(),
                   [](std::size_t a, std::size_t b) { return __builtin_popcountll(a) < __builtin_popcountll(b); });
  for (std::size_t u : order) {
    if (u == 0) continue;
    const int size = __builtin_popcountll(u);
    for (int d1 = 0; d1 <= size; ++d1) {
      for (int d2 = 0; d1 + d2 <= size; ++d2) {
        if (d1 + d2 == 0) continue;
        for (int s = 0; s < w; ++s) {
          BigInt v = 0;
          if (d1 + d2 == 1) {
            v = d1 ? beta.i(u, s) : beta.ii(u, s);
          } else {
            const bool peel_i = d1 >= 1;
            for (std::size_t wset = (u - 1) & u; wset; wset = (wset - 1) & u) {
              for (int t = 0; t <= s; ++t) {
                const BigInt& b = peel_i ? beta.i(wset, t) : beta.ii(wset, t);
                if (b == 0) continue;
                const auto& rest = peel_i ? sig[d1 - 1][d2] : sig[d1][d2 - 1];
                v += b * rest[(u & ~wset) * w + (s - t)];
              }
            }
            v = exact_div(v, peel_i ? d1 : d2, "component-type peeling");
          }
          sig[d1][d2][u * w + s] = v;
        }
      }
    }
  }
  return sig;
}

/// log2 of a bound on every intermediate magnitude of the transform DP.
inline double wt2_magnitude_bound(int q, int k, int m) {
  const double lattice = k * std::log2(static_cast<double>(q));
  return k + std::log2(static_cast<double>(std::max(1, k)) * (m + 1)) + 2 * lattice + 2.0 * m;
}

namespace detail {

template <class T>
RankSizeTable run_wt2(const Multigraph& g, OpCounter* ops) {
  Wt2Engine<T> eng(g, ops);
  const auto alpha = eng.alpha();
  const auto alphah = eng.alpha_h();
  auto [bii, bi] = eng.beta(alpha[1], alphah[1]);
  return eng.tau(bii, bi);
}

}  // namespace detail

inline RankSizeTable tutte_wt2(const FqMatrix& mat, Wt2Stats* stats = nullptr) {
  const Multigraph g = Multigraph::from_matrix(mat);
  require_full_rank(mat, "tutte_wt2");
  Wt2Stats local;
  Wt2Stats& st = stats ? *stats : local;
  st.log2_bound = wt2_magnitude_bound(static_cast<int>(mat.ctx().q()), mat.k(), mat.m());
  st.machine_integers = st.log2_bound < 126;
  RankSizeTable t = st.machine_integers ? detail::run_wt2<Int128>(g, &st.ops)
                                        : detail::run_wt2<BigInt>(g, &st.ops);
  check_table(t);
  return t;
}

}  // namespace tutte

#endif  // TUTTE_WT2_HPP
