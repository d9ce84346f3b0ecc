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

// Linear matroids as k x m matrices over GF(q).

#ifndef TUTTE_MATROID_HPP
#define TUTTE_MATROID_HPP

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "tutte/error.hpp"
#include "tutte/gf.hpp"
#include "tutte/text.hpp"

namespace tutte {

using ColumnSet = boost::dynamic_bitset<>;

inline ColumnSet empty_set(int m) { return ColumnSet(static_cast<std::size_t>(m)); }

inline ColumnSet full_set(int m) {
  ColumnSet s(static_cast<std::size_t>(m));
  s.set();
  return s;
}

inline ColumnSet column_set(int m, std::initializer_list<int> cols) {
  ColumnSet s(static_cast<std::size_t>(m));
  for (int c : cols) {
    require(c >= 0 && c < m, Errc::IndexOutOfRange, "column " + std::to_string(c));
    s.set(static_cast<std::size_t>(c));
  }
  return s;
}

/// Column set from the low m bits of a mask.
inline ColumnSet mask_set(int m, unsigned long long mask) {
  return ColumnSet(static_cast<std::size_t>(m), mask);
}

class FqMatrix {
 public:
  FqMatrix(FieldCtx ctx, int k, int m)
      : ctx_(std::move(ctx)), k_(k), m_(m),
        entries_(static_cast<std::size_t>(k) * static_cast<std::size_t>(m)) {
    require(k >= 0 && m >= 0, Errc::InvalidArgument, "negative matrix dimension");
    labels_.resize(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) labels_[c] = std::to_string(c);
  }

  FqMatrix(FieldCtx ctx, int k, int m, std::vector<FieldElem> entries)
      : FqMatrix(std::move(ctx), k, m) {
    require(entries.size() == entries_.size(), Errc::SizeMismatch,
            "expected " + std::to_string(entries_.size()) + " entries");
    for (auto e : entries) ctx_.elem(e.value);
    entries_ = std::move(entries);
  }

  /// Builds a matrix from rows of integer encodings.
  static FqMatrix from_rows(const FieldCtx& ctx, const std::vector<std::vector<unsigned>>& rows) {
    const int k = static_cast<int>(rows.size());
    const int m = k ? static_cast<int>(rows[0].size()) : 0;
    FqMatrix out(ctx, k, m);
    for (int r = 0; r < k; ++r) {
      require(static_cast<int>(rows[r].size()) == m, Errc::SizeMismatch, "ragged rows");
      for (int c = 0; c < m; ++c) out.set(r, c, ctx.elem(rows[r][c]));
    }
    return out;
  }

  const FieldCtx& ctx() const { return ctx_; }
  int k() const { return k_; }
  int m() const { return m_; }
  const std::vector<FieldElem>& entries() const { return entries_; }
  const std::vector<std::string>& col_labels() const { return labels_; }
  void set_col_labels(std::vector<std::string> labels) {
    require(static_cast<int>(labels.size()) == m_, Errc::SizeMismatch, "label count");
    labels_ = std::move(labels);
  }

  FieldElem at(int r, int c) const { return entries_[index(r, c)]; }
  void set(int r, int c, FieldElem v) { entries_[index(r, c)] = ctx_.elem(v.value); }

  std::vector<FieldElem> column(int c) const {
    std::vector<FieldElem> v(static_cast<std::size_t>(k_));
    for (int r = 0; r < k_; ++r) v[r] = at(r, c);
    return v;
  }

  std::vector<FieldElem> row(int r) const {
    return {entries_.begin() + static_cast<long>(r) * m_,
            entries_.begin() + static_cast<long>(r + 1) * m_};
  }

  int col_weight(int c) const {
    int w = 0;
    for (int r = 0; r < k_; ++r) w += at(r, c).value != 0;
    return w;
  }

  /// The columns in `s`, in index order.
  FqMatrix restrict_columns(const ColumnSet& s) const {
    std::vector<int> cols;
    for (auto c = s.find_first(); c != ColumnSet::npos; c = s.find_next(c)) cols.push_back(static_cast<int>(c));
    FqMatrix out(ctx_, k_, static_cast<int>(cols.size()));
    for (int r = 0; r < k_; ++r)
      for (std::size_t j = 0; j < cols.size(); ++j) out.set(r, static_cast<int>(j), at(r, cols[j]));
    return out;
  }

  bool operator==(const FqMatrix& o) const {
    return ctx_ == o.ctx_ && k_ == o.k_ && m_ == o.m_ && entries_ == o.entries_;
  }

 private:
  std::size_t index(int r, int c) const {
    require(r >= 0 && r < k_ && c >= 0 && c < m_, Errc::IndexOutOfRange,
            "entry (" + std::to_string(r) + "," + std::to_string(c) + ")");
    return static_cast<std::size_t>(r) * m_ + c;
  }

  FieldCtx ctx_;
  int k_;
  int m_;
  std::vector<FieldElem> entries_;
  std::vector<std::string> labels_;
};

/// Incrementally maintained echelon basis of a subspace of GF(q)^n.
/// Every stored vector has a unit pivot and is zero at the pivots of the
/// vectors inserted before it.
class EchelonBasis {
 public:
  EchelonBasis(FieldCtx ctx, int n) : ctx_(std::move(ctx)), n_(n) {}

  int rank() const { return static_cast<int>(rows_.size()); }
  int dim() const { return n_; }

  /// Reduces v in place against the basis.
  void reduce(std::vector<FieldElem>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const FieldElem c = v[pivots_[i]];
      if (c.value == 0) continue;
      const auto& b = rows_[i];
      for (int j = 0; j < n_; ++j) {
        if (b[j].value) v[j] = ctx_.sub(v[j], ctx_.mul(c, b[j]));
      }
    }
  }

  bool in_span(std::vector<FieldElem> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](FieldElem e) { return e.value == 0; });
  }

  /// Adds v; returns false (and leaves the basis unchanged) if v is dependent.
  bool insert(std::vector<FieldElem> v) {
    reduce(v);
    int piv = -1;
    for (int j = 0; j < n_; ++j) {
      if (v[j].value) {
        piv = j;
        break;
      }
    }
    if (piv < 0) return false;
    const FieldElem s = ctx_.inv(v[piv]);
    for (auto& e : v) e = ctx_.mul(e, s);
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

 private:
  FieldCtx ctx_;
  int n_;
  std::vector<std::vector<FieldElem>> rows_;
  std::vector<int> pivots_;
};

/// Rank of the column submatrix M[S].
inline int rank(const FqMatrix& mat, const ColumnSet& s) {
  require(static_cast<int>(s.size()) == mat.m(), Errc::IndexOutOfRange,
          "column set width " + std::to_string(s.size()) + " != m = " + std::to_string(mat.m()));
  EchelonBasis basis(mat.ctx(), mat.k());
  for (auto c = s.find_first(); c != ColumnSet::npos; c = s.find_next(c)) {
    basis.insert(mat.column(static_cast<int>(c)));
    if (basis.rank() == mat.k()) break;
  }
  return basis.rank();
}

inline int rank(const FqMatrix& mat) { return rank(mat, full_set(mat.m())); }

inline void require_full_rank(const FqMatrix& mat, const std::string& where) {
  const int r = rank(mat);
  require(r == mat.k(), Errc::RankDeficient,
          where + ": matrix has rank " + std::to_string(r) + " < k = " + std::to_string(mat.k()));
}

inline int max_col_weight(const FqMatrix& mat) {
  int w = 0;
  for (int c = 0; c < mat.m(); ++c) w = std::max(w, mat.col_weight(c));
  return w;
}

/// Incidence matrix over GF(2) of a multigraph on k vertices. A loop gives
/// the all-zero column.
inline FqMatrix from_graph(int k, const std::vector<std::pair<int, int>>& edges) {
  FqMatrix out(FieldCtx(2, 1), k, static_cast<int>(edges.size()));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    require(u >= 0 && u < k && v >= 0 && v < k, Errc::IndexOutOfRange,
            "edge " + std::to_string(e) + " has vertex outside 0.." + std::to_string(k - 1));
    if (u == v) continue;
    out.set(u, static_cast<int>(e), FieldElem{1});
    out.set(v, static_cast<int>(e), FieldElem{1});
  }
  return out;
}

/// Greedy maximal set of linearly independent rows, in row order. The
/// result has the same column matroid and full row rank.
inline FqMatrix row_basis(const FqMatrix& mat) {
  EchelonBasis basis(mat.ctx(), mat.m());
  std::vector<int> keep;
  for (int r = 0; r < mat.k(); ++r) {
    if (basis.insert(mat.row(r))) keep.push_back(r);
  }
  FqMatrix out(mat.ctx(), static_cast<int>(keep.size()), mat.m());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (int c = 0; c < mat.m(); ++c) out.set(static_cast<int>(i), c, mat.at(keep[i], c));
  out.set_col_labels(mat.col_labels());
  return out;
}

/// Full-row-rank representation of the graphic matroid. For a graph this
/// drops one vertex row per connected component, so column weights stay
/// at most two.
inline FqMatrix graphic_matroid(int k, const std::vector<std::pair<int, int>>& edges) {
  return row_basis(from_graph(k, edges));
}

// ---- text formats ----------------------------------------------------------

inline FqMatrix parse_matrix(const std::vector<TextLine>& lines) {
  require(!lines.empty(), Errc::ParseError, "empty matrix file");
  expect_tokens(lines[0], 4);
  const int ln = lines[0].number;
  const auto p = static_cast<std::uint32_t>(parse_in_range(lines[0].tokens[0], ln, 2, kMaxFieldOrder));
  const auto d = static_cast<std::uint32_t>(parse_in_range(lines[0].tokens[1], ln, 1, 31));
  const int k = static_cast<int>(parse_in_range(lines[0].tokens[2], ln, 0, 1 << 20));
  const int m = static_cast<int>(parse_in_range(lines[0].tokens[3], ln, 0, 1 << 20));
  FieldCtx ctx = [&] {
    try {
      return FieldCtx(p, d);
    } catch (const Error& e) {
      fail(Errc::ParseError, std::string("line 1: ") + e.what());
    }
  }();
  require(static_cast<int>(lines.size()) == k + 1, Errc::ParseError,
          "expected " + std::to_string(k) + " matrix rows, got " + std::to_string(lines.size() - 1));
  FqMatrix out(ctx, k, m);
  for (int r = 0; r < k; ++r) {
    const auto& l = lines[r + 1];
    expect_tokens(l, static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c)
      out.set(r, c, FieldElem{static_cast<std::uint32_t>(parse_in_range(l.tokens[c], l.number, 0, ctx.q() - 1))});
  }
  return out;
}

inline FqMatrix read_matrix(std::istream& in) { return parse_matrix(read_text_lines(in)); }

inline void write_matrix(std::ostream& out, const FqMatrix& mat) {
  out << mat.ctx().p() << ' ' << mat.ctx().d() << ' ' << mat.k() << ' ' << mat.m() << '\n';
  for (int r = 0; r < mat.k(); ++r) {
    for (int c = 0; c < mat.m(); ++c) out << (c ? " " : "") << mat.at(r, c).value;
    out << '\n';
  }
}

struct Graph {
  int k = 0;
  std::vector<std::pair<int, int>> edges;
};

inline Graph parse_graph(const std::vector<TextLine>& lines) {
  require(!lines.empty(), Errc::ParseError, "empty graph file");
  expect_tokens(lines[0], 2);
  Graph g;
  g.k = static_cast<int>(parse_in_range(lines[0].tokens[0], lines[0].number, 0, 1 << 20));
  const auto m = parse_in_range(lines[0].tokens[1], lines[0].number, 0, 1 << 20);
  require(static_cast<long long>(lines.size()) == m + 1, Errc::ParseError,
          "expected " + std::to_string(m) + " edge lines, got " + std::to_string(lines.size() - 1));
  for (long long e = 0; e < m; ++e) {
    const auto& l = lines[e + 1];
    expect_tokens(l, 2);
    g.edges.emplace_back(static_cast<int>(parse_in_range(l.tokens[0], l.number, 0, g.k - 1)),
                         static_cast<int>(parse_in_range(l.tokens[1], l.number, 0, g.k - 1)));
  }
  return g;
}

inline Graph read_graph(std::istream& in) { return parse_graph(read_text_lines(in)); }

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.k << ' ' << g.edges.size() << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

}  // namespace tutte

#endif  // TUTTE_MATROID_HPP
