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


// Count-preserving transformations from CNF down to generator matrices:
//
//   3-CNF -> bipartite CSP -> grouped bipartite CSP
//         -> special modular system over Z_M -> homogeneous system over GF(M+1)
//         -> generator matrix with at most two nonzeros per column
//
// and, for a fixed base field, bipartite CSP -> homogeneous sum-inequations of
// arity three over GF(q) -> generator matrix over the prime field.
//
// Padding variables have a one-element domain, so they never change a count.

#ifndef TUTTE_REDUCTIONS_HPP
#define TUTTE_REDUCTIONS_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tutte/csp.hpp"
#include "tutte/gf.hpp"
#include "tutte/matroid.hpp"

namespace tutte {

/// Clause variables get domain {0,1}^a (bit l is the value of the l-th
/// distinct variable of the clause) and one arity-2 constraint per variable
/// occurrence tying the bit to the original variable. Original variables
/// form side 0, clause variables side 1.
inline CspInstance cnf_to_bipartite_csp(const Cnf& phi) {
  std::vector<char> used(phi.vars, 0);
  for (const auto& c : phi.clauses) {
    require(!c.empty(), Errc::InvalidArgument, "empty clause");
    for (int lit : c) {
      require(lit != 0 && std::abs(lit) <= phi.vars, Errc::IndexOutOfRange, "literal outside 1..vars");
      used[std::abs(lit) - 1] = 1;
    }
  }
  for (int v = 0; v < phi.vars; ++v)
    require(used[v], Errc::UnusedVariable, "variable " + std::to_string(v + 1) + " occurs in no clause");
  CspInstance out;
  out.domain.assign(phi.vars, 2);
  out.side.assign(phi.vars, 0);
  for (const auto& clause : phi.clauses) {
    std::vector<int> vars;
    for (int lit : clause)
      if (std::find(vars.begin(), vars.end(), std::abs(lit) - 1) == vars.end()) vars.push_back(std::abs(lit) - 1);
    const int a = static_cast<int>(vars.size());
    const int cv = out.vars();
    out.domain.push_back(1 << a);
    out.side.push_back(1);
    std::vector<int> sat;
    for (int w = 0; w < (1 << a); ++w) {
      bool ok = false;
      for (int lit : clause) {
        const int pos = static_cast<int>(std::find(vars.begin(), vars.end(), std::abs(lit) - 1) - vars.begin());
        ok = ok || ((w >> pos & 1) == (lit > 0));
      }
      if (ok) sat.push_back(w);
    }
    for (int l = 0; l < a; ++l) {
      CspConstraint con;
      con.support = {vars[l], cv};
      for (int w : sat) con.permitted.push_back({w >> l & 1, w});
      out.constraints.push_back(std::move(con));
    }
  }
  return out;
}

namespace detail {

inline void require_bipartite(const CspInstance& phi) {
  phi.validate();
  require(phi.bipartite(), Errc::NotBipartite,
          "instance needs sides and arity-2 constraints with support (side 0, side 1)");
}

struct Sides {
  std::vector<int> x;  // original indices; -1 marks a padding variable
  std::vector<int> y;
};

/// Side lists padded with one-value variables to a common length of at
/// least `min_len`.
inline Sides padded_sides(const CspInstance& phi, std::size_t min_len = 1) {
  Sides s;
  for (int i = 0; i < phi.vars(); ++i) (phi.side[i] ? s.y : s.x).push_back(i);
  const std::size_t n = std::max({s.x.size(), s.y.size(), min_len});
  s.x.resize(n, -1);
  s.y.resize(n, -1);
  return s;
}

/// Position of each original variable within its side list.
inline std::vector<int> side_positions(const CspInstance& phi, const Sides& s) {
  std::vector<int> pos(phi.vars(), -1);
  for (std::size_t i = 0; i < s.x.size(); ++i)
    if (s.x[i] >= 0) pos[s.x[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < s.y.size(); ++i)
    if (s.y[i] >= 0) pos[s.y[i]] = static_cast<int>(i);
  return pos;
}

inline int padded_domain(const CspInstance& phi, int v) { return v < 0 ? 1 : phi.domain[v]; }

}  // namespace detail

/// Groups g consecutive variables of each side into one variable whose
/// domain is the product of the member domains (first member least
/// significant). Each constraint becomes a constraint on the two groups
/// that fixes only the two original coordinates.
inline CspInstance aggregate_vars(const CspInstance& phi, int g) {
  detail::require_bipartite(phi);
  require(g >= 1, Errc::InvalidArgument, "group size must be positive");
  const auto s = detail::padded_sides(phi);
  const auto pos = detail::side_positions(phi, s);
  const int n = static_cast<int>(s.x.size());
  const int groups = (n + g - 1) / g;
  CspInstance out;
  // Mixed-radix strides of each padded position inside its group.
  auto layout = [&](const std::vector<int>& side, std::vector<int>& stride, std::vector<int>& gdom) {
    stride.assign(n, 1);
    gdom.assign(groups, 1);
    for (int i = 0; i < n; ++i) {
      stride[i] = gdom[i / g];
      gdom[i / g] *= detail::padded_domain(phi, side[i]);
      require(gdom[i / g] <= (1 << 24), Errc::TooLarge, "aggregated domain exceeds 2^24");
    }
  };
  std::vector<int> sx, sy, dx, dy;
  layout(s.x, sx, dx);
  layout(s.y, sy, dy);
  for (int i = 0; i < groups; ++i) {
    out.domain.push_back(dx[i]);
    out.side.push_back(0);
  }
  for (int i = 0; i < groups; ++i) {
    out.domain.push_back(dy[i]);
    out.side.push_back(1);
  }
  for (const auto& c : phi.constraints) {
    const int px = pos[c.support[0]], py = pos[c.support[1]];
    const int gx = px / g, gy = py / g;
    const int dxv = phi.domain[c.support[0]], dyv = phi.domain[c.support[1]];
    std::vector<char> ok(static_cast<std::size_t>(dxv) * dyv, 0);
    for (const auto& t : c.permitted) ok[static_cast<std::size_t>(t[0]) * dyv + t[1]] = 1;
    CspConstraint con;
    con.support = {gx, groups + gy};
    for (int X = 0; X < dx[gx]; ++X) {
      const int a = X / sx[px] % dxv;
      for (int Y = 0; Y < dy[gy]; ++Y) {
        const int b = Y / sy[py] % dyv;
        if (ok[static_cast<std::size_t>(a) * dyv + b]) con.permitted.push_back({X, Y});
      }
    }
    out.constraints.push_back(std::move(con));
  }
  return out;
}

/// Variables x_0..x_{n-1}, y_0..y_{n-1}, z over Z_M. Value a of an x
/// variable is relabeled to (a+1)d and value b of a y variable to b, where
/// d is the largest domain; x_i - z and y_j - z are confined to those
/// labels, and each forbidden pair (a, b) of a constraint forbids the
/// difference (a+1)d - b. Every solution of phi yields exactly M solutions,
/// one per value of z.
inline InequationSystem csp_to_special_modular(const CspInstance& phi, std::uint32_t M) {
  detail::require_bipartite(phi);
  const auto s = detail::padded_sides(phi);
  const auto pos = detail::side_positions(phi, s);
  const int n = static_cast<int>(s.x.size());
  const std::uint64_t d = static_cast<std::uint64_t>(phi.max_domain());
  require(M >= 3u * static_cast<std::uint64_t>(n) && M > d * d, Errc::ModulusTooSmall,
          "modulus " + std::to_string(M) + " needs M >= 3n = " + std::to_string(3 * n) +
              " and M > d^2 = " + std::to_string(d * d));
  auto sys = InequationSystem::over_modulus(M, 2 * n + 1);
  const int z = 2 * n;
  const std::uint32_t minus = M - 1;
  for (int i = 0; i < n; ++i) {
    const int dom = detail::padded_domain(phi, s.x[i]);
    for (std::uint32_t c = 0; c < M; ++c) {
      const bool label = c % d == 0 && c / d >= 1 && c / d <= static_cast<std::uint64_t>(dom);
      if (!label) sys.add({{i, 1}, {z, minus}}, c);
    }
  }
  for (int j = 0; j < n; ++j) {
    const int dom = detail::padded_domain(phi, s.y[j]);
    for (std::uint32_t c = static_cast<std::uint32_t>(dom); c < M; ++c) sys.add({{n + j, 1}, {z, minus}}, c);
  }
  for (const auto& con : phi.constraints) {
    const int i = pos[con.support[0]], j = pos[con.support[1]];
    const int da = phi.domain[con.support[0]], db = phi.domain[con.support[1]];
    std::set<std::pair<int, int>> ok;
    for (const auto& t : con.permitted) ok.insert({t[0], t[1]});
    for (int a = 0; a < da; ++a)
      for (int b = 0; b < db; ++b)
        if (!ok.count({a, b}))
          sys.add({{i, 1}, {n + j, minus}}, static_cast<std::uint32_t>((a + 1) * d - b));
  }
  return sys;
}

/// Writing u' = gamma^u, the constraint u - w != c over Z_{q-1} becomes
/// u' - gamma^c w' != 0; every variable also gets u' != 0. The unit
/// inequations come first.
inline InequationSystem modular_to_homogeneous(const InequationSystem& sys, const FieldCtx& ctx) {
  sys.validate();
  require(sys.modular(), Errc::InvalidArgument, "expected a system over Z_M");
  require(std::uint64_t{sys.modulus} + 1 == ctx.q(), Errc::OrderMismatch,
          "modulus " + std::to_string(sys.modulus) + " differs from q - 1 for " + ctx.name());
  auto out = InequationSystem::over_field(ctx, sys.n);
  for (int v = 0; v < sys.n; ++v) out.add({{v, 1}});
  const std::uint32_t minus = sys.modulus - 1;
  for (const auto& r : sys.rows) {
    int u = -1, w = -1;
    for (int v = 0; v < sys.n; ++v) {
      if (r.coeff[v] == 1 && u < 0) {
        u = v;
      } else if (r.coeff[v] == minus && w < 0) {
        w = v;
      } else {
        require(r.coeff[v] == 0, Errc::InvalidArgument, "inequation is not of the form u - w != c");
      }
    }
    require(u >= 0 && w >= 0 && r.arity() == 2, Errc::InvalidArgument, "inequation is not of the form u - w != c");
    out.add({{u, 1}, {w, ctx.neg(ctx.gamma_pow(r.rhs)).value}});
  }
  return out;
}

// ---- Sidon sets ----------------------------------------------------------------

/// x + y != z + w for all x, y, z, w in s with at least three distinct,
/// by scanning every four-tuple.
inline bool is_sidon(const FieldCtx& ctx, const std::vector<FieldElem>& s) {
  for (auto x : s)
    for (auto y : s)
      for (auto z : s)
        for (auto w : s) {
          std::set<std::uint32_t> distinct{x.value, y.value, z.value, w.value};
          if (distinct.size() >= 3 && ctx.add(x, y) == ctx.add(z, w)) return false;
        }
  return true;
}

/// A Sidon set of the given size in the additive group of ctx, by
/// depth-first extension in increasing encoding order; nullopt when none
/// exists.
inline std::optional<std::vector<FieldElem>> find_sidon(const FieldCtx& ctx, int size) {
  require(size >= 0, Errc::InvalidArgument, "size must be nonnegative");
  if (static_cast<std::uint64_t>(size) > ctx.q()) return std::nullopt;
  std::vector<FieldElem> cur;
  // Adding e keeps the Sidon property iff no violating tuple involves e.
  auto fits = [&](FieldElem e) {
    std::vector<FieldElem> all = cur;
    all.push_back(e);
    for (auto y : all)
      for (auto z : all)
        for (auto w : all) {
          std::set<std::uint32_t> distinct{e.value, y.value, z.value, w.value};
          if (distinct.size() < 3) continue;
          if (ctx.add(e, y) == ctx.add(z, w)) return false;
        }
    return true;
  };
  auto rec = [&](auto&& self, std::uint32_t from) -> bool {
    if (static_cast<int>(cur.size()) == size) return true;
    for (std::uint32_t v = from; v < ctx.q(); ++v) {
      if (ctx.q() - v < static_cast<std::uint32_t>(size - cur.size())) break;
      if (!fits(FieldElem{v})) continue;
      cur.push_back(FieldElem{v});
      if (self(self, v + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return cur;
}

// ---- sum-inequations ------------------------------------------------------------

/// Output of csp_to_sum_inequations. Variables of `system` are ordered
/// x (n), y (n), s (d), t (d), r (q - 2d), v (q). `normalizer` holds the
/// s, t, r, v variables and inequation families (i)-(iii) only; its
/// solution count is the factor f(q, d) relating the two counts.
struct SumInequationReduction {
  InequationSystem system;
  InequationSystem normalizer;
  int n = 0;
  int d = 0;
  std::vector<FieldElem> sidon;  // witness that the normalizer is satisfiable
};

/// Homogeneous sum-inequations of arity at most three over ctx with
/// |SAT(system)| = f(q, d) |SAT(phi)|. Value a of any variable is relabeled
/// to a + 1 in {1..d}; a variable whose domain is shorter than d gets an
/// extra constraint excluding its missing values.
inline SumInequationReduction csp_to_sum_inequations(const CspInstance& phi, const FieldCtx& ctx) {
  detail::require_bipartite(phi);
  const auto sides = detail::padded_sides(phi);
  const auto pos = detail::side_positions(phi, sides);
  const int n = static_cast<int>(sides.x.size());
  const int d = phi.max_domain();
  const std::uint64_t q = ctx.q();
  auto sidon = find_sidon(ctx, 2 * d);
  require(sidon.has_value(), Errc::NoSidonSet,
          "no Sidon set of size " + std::to_string(2 * d) + " in " + ctx.name());
  require(static_cast<std::uint64_t>(d) * d <= q && 2u * d <= q, Errc::NoSidonSet,
          "field too small for domain size " + std::to_string(d));

  // Constraints on padded positions, including domain fences for short domains.
  struct Pair {
    int i, j;
    std::vector<std::pair<int, int>> permitted;
  };
  std::vector<Pair> pairs;
  for (const auto& c : phi.constraints) {
    Pair p{pos[c.support[0]], pos[c.support[1]], {}};
    for (const auto& t : c.permitted) p.permitted.emplace_back(t[0], t[1]);
    pairs.push_back(std::move(p));
  }
  auto fence = [&](int i, int j) {
    Pair p{i, j, {}};
    const int da = detail::padded_domain(phi, sides.x[i]), db = detail::padded_domain(phi, sides.y[j]);
    for (int a = 0; a < da; ++a)
      for (int b = 0; b < db; ++b) p.permitted.emplace_back(a, b);
    pairs.push_back(std::move(p));
  };
  for (int i = 0; i < n; ++i)
    if (detail::padded_domain(phi, sides.x[i]) < d) fence(i, 0);
  for (int j = 0; j < n; ++j)
    if (detail::padded_domain(phi, sides.y[j]) < d) fence(0, j);

  const int Q = static_cast<int>(q);
  const int X = 0, Y = n, S = 2 * n, T = S + d, R = T + d, V = R + (Q - 2 * d);
  const std::uint32_t one = 1, minus = ctx.neg(ctx.one()).value;
  auto g = [d](int a, int b) { return a * d + b; };  // injective into 0..q-1

  SumInequationReduction out;
  out.n = n;
  out.d = d;
  out.sidon = *sidon;
  // The normalizer families, emitted once with an index shift.
  auto normalizer = [&](InequationSystem& sys, int base) {
    const int s = base, t = base + d, v = base + Q;
    for (int a = 0; a < Q; ++a)  // (i) s, t, r pairwise distinct
      for (int b = a + 1; b < Q; ++b) sys.add({{s + a, one}, {s + b, minus}});
    for (int a = 0; a < Q; ++a)  // (ii) v pairwise distinct
      for (int b = a + 1; b < Q; ++b) sys.add({{v + a, one}, {v + b, minus}});
    for (int a = 0; a < d; ++a)  // (iii) s_a + t_b = v_g(a,b)
      for (int b = 0; b < d; ++b)
        for (int k = 0; k < Q; ++k)
          if (k != g(a, b)) sys.add({{s + a, one}, {t + b, one}, {v + k, minus}});
  };
  out.normalizer = InequationSystem::over_field(ctx, 2 * Q);
  normalizer(out.normalizer, 0);

  auto& sys = out.system = InequationSystem::over_field(ctx, 2 * (n + Q));
  normalizer(sys, S);
  for (int i = 0; i < n; ++i) {  // (iv) x_i among the s values
    for (int b = 0; b < d; ++b) sys.add({{X + i, one}, {T + b, minus}});
    for (int l = 0; l < Q - 2 * d; ++l) sys.add({{X + i, one}, {R + l, minus}});
  }
  for (int j = 0; j < n; ++j) {  // (v) y_j among the t values
    for (int a = 0; a < d; ++a) sys.add({{Y + j, one}, {S + a, minus}});
    for (int l = 0; l < Q - 2 * d; ++l) sys.add({{Y + j, one}, {R + l, minus}});
  }
  for (const auto& p : pairs) {  // (vi) x_i + y_j lands on a permitted v
    std::vector<char> allowed(Q, 0);
    for (auto [a, b] : p.permitted) allowed[g(a, b)] = 1;
    for (int k = 0; k < Q; ++k)
      if (!allowed[k]) sys.add({{X + p.i, one}, {Y + p.j, one}, {V + k, minus}});
  }
  return out;
}

// ---- generator matrices -----------------------------------------------------------

namespace detail {

inline FqMatrix coefficient_matrix(const InequationSystem& sys, const FieldCtx& target) {
  FqMatrix g(target, sys.n, static_cast<int>(sys.rows.size()));
  for (std::size_t c = 0; c < sys.rows.size(); ++c)
    for (int r = 0; r < sys.n; ++r) g.set(r, static_cast<int>(c), FieldElem{sys.rows[c].coeff[r]});
  return g;
}

}  // namespace detail

/// One column per inequation holding its coefficient vector, so xG has full
/// support iff x satisfies the system.
inline FqMatrix inequations_to_generator(const InequationSystem& sys) {
  sys.validate();
  require(!sys.modular(), Errc::InvalidArgument, "expected a system over a field");
  require(sys.homogeneous(), Errc::Inhomogeneous, "generator matrices need homogeneous inequations");
  auto g = detail::coefficient_matrix(sys, *sys.field);
  require_full_rank(g, "inequations_to_generator");
  return g;
}

/// For systems whose coefficient matrix G is not of full row rank. `basis`
/// is a full-row-rank matrix with the row space (and column matroid) of G;
/// each codeword of that space has q^kernel_dim preimages x, so
/// |SAT| = q^kernel_dim * (full-support codewords of basis).
struct KernelGenerator {
  FqMatrix basis;
  int kernel_dim = 0;
};

/// As inequations_to_generator, but over `base`, a subfield containing all
/// coefficients, and without the full-rank requirement. Coefficients must
/// lie in the prime field, where encodings agree across extensions.
inline KernelGenerator generator_with_kernel(const InequationSystem& sys, const FieldCtx& base) {
  sys.validate();
  require(!sys.modular(), Errc::InvalidArgument, "expected a system over a field");
  require(sys.homogeneous(), Errc::Inhomogeneous, "generator matrices need homogeneous inequations");
  require(base.p() == sys.field->p() && sys.field->d() % base.d() == 0, Errc::CharMismatch,
          base.name() + " is not a subfield of " + sys.field->name());
  for (const auto& r : sys.rows)
    for (auto c : r.coeff)
      require(c < base.p(), Errc::InvalidArgument, "coefficient outside the prime field");
  const auto g = detail::coefficient_matrix(sys, base);
  KernelGenerator out{row_basis(g), 0};
  out.kernel_dim = sys.n - out.basis.k();
  return out;
}

}  // namespace tutte

#endif  // TUTTE_REDUCTIONS_HPP
