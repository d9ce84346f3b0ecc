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


// Seeded random instances for the gen and bench commands.

#ifndef TUTTE_RANDOM_HPP
#define TUTTE_RANDOM_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "tutte/csp.hpp"
#include "tutte/matroid.hpp"

namespace tutte {

using Rng = std::mt19937_64;

/// Uniform matrix of rank k, by rejection; needs m >= k.
inline FqMatrix random_general(const FieldCtx& f, int k, int m, Rng& rng) {
  require(m >= k, Errc::InvalidArgument, "full rank needs m >= k");
  std::uniform_int_distribution<std::uint32_t> dist(0, f.q() - 1);
  for (;;) {
    FqMatrix out(f, k, m);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < m; ++c) out.set(r, c, FieldElem{dist(rng)});
    if (rank(out) == k) return out;
  }
}

/// Rank-k matrix whose columns have one or two nonzero entries.
inline FqMatrix random_weight2(const FieldCtx& f, int k, int m, Rng& rng) {
  require(m >= k && k >= 1, Errc::InvalidArgument, "full rank needs m >= k >= 1");
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
    if (rank(out) == k) return out;
  }
}

/// Connected multigraph on `vertices` vertices with `edges` edges: a random
/// spanning tree plus uniform non-loop edges.
inline Graph random_connected_graph(int vertices, int edges, Rng& rng) {
  require(vertices >= 1 && edges >= vertices - 1, Errc::InvalidArgument, "too few edges to connect the graph");
  require(vertices >= 2 || edges == 0, Errc::InvalidArgument, "a single vertex admits no non-loop edge");
  Graph g{vertices, {}};
  for (int v = 1; v < vertices; ++v) g.edges.emplace_back(static_cast<int>(rng() % v), v);
  while (static_cast<int>(g.edges.size()) < edges) {
    const int a = static_cast<int>(rng() % vertices), b = static_cast<int>(rng() % vertices);
    if (a != b) g.edges.emplace_back(a, b);
  }
  return g;
}

/// Graphic matroid of rank k: a connected graph on k + 1 vertices.
inline FqMatrix random_graphic(int k, int m, Rng& rng) {
  const auto g = random_connected_graph(k + 1, m, rng);
  return graphic_matroid(g.k, g.edges);
}

/// CNF in which every variable occurs; clause widths 1..width.
inline Cnf random_cnf(int vars, int clauses, int width, Rng& rng) {
  require(vars >= 1 && width >= 1 && clauses * width >= vars, Errc::InvalidArgument,
          "not enough literal slots to use every variable");
  for (;;) {
    Cnf f{vars, {}};
    std::vector<char> used(vars, 0);
    for (int c = 0; c < clauses; ++c) {
      const int w = 1 + static_cast<int>(rng() % width);
      std::vector<int> clause;
      for (int l = 0; l < w; ++l) {
        const int v = static_cast<int>(rng() % vars);
        used[v] = 1;
        clause.push_back(rng() % 2 ? v + 1 : -(v + 1));
      }
      f.clauses.push_back(std::move(clause));
    }
    if (std::all_of(used.begin(), used.end(), [](char u) { return u; })) return f;
  }
}

/// Bipartite CSP with nx side-0 and ny side-1 variables, domains in
/// 1..dmax, and `constraints` random arity-2 constraints.
inline CspInstance random_bipartite_csp(int nx, int ny, int dmax, int constraints, Rng& rng) {
  require(nx >= 1 && ny >= 1 && dmax >= 1, Errc::InvalidArgument, "need a variable on each side");
  CspInstance inst;
  for (int i = 0; i < nx + ny; ++i) {
    inst.domain.push_back(1 + static_cast<int>(rng() % dmax));
    inst.side.push_back(i >= nx);
  }
  for (int c = 0; c < constraints; ++c) {
    CspConstraint con;
    con.support = {static_cast<int>(rng() % nx), nx + static_cast<int>(rng() % ny)};
    for (int a = 0; a < inst.domain[con.support[0]]; ++a)
      for (int b = 0; b < inst.domain[con.support[1]]; ++b)
        if (rng() % 3 != 0) con.permitted.push_back({a, b});
    inst.constraints.push_back(std::move(con));
  }
  return inst;
}

}  // namespace tutte

#endif  // TUTTE_RANDOM_HPP
