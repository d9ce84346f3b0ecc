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


// Constraint satisfaction instances, inequation systems, exhaustive
// solution counting and the text formats for all three.

#ifndef TUTTE_CSP_HPP
#define TUTTE_CSP_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tutte/error.hpp"
#include "tutte/gf.hpp"
#include "tutte/integer.hpp"
#include "tutte/text.hpp"

namespace tutte {

inline constexpr std::uint64_t kSolutionSpaceLimit = std::uint64_t{1} << 22;

// ---- CNF ---------------------------------------------------------------------

/// Clauses hold DIMACS literals: +v or -v for variable v in 1..vars.
struct Cnf {
  int vars = 0;
  std::vector<std::vector<int>> clauses;

  bool operator==(const Cnf&) const = default;
};

inline Cnf read_cnf(std::istream& in) {
  Cnf out;
  bool header = false;
  std::vector<int> cur;
  std::string line;
  int number = 0;
  long long expected = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok) || tok == "c" || tok[0] == '#' || tok[0] == '%') continue;
    if (tok == "p") {
      std::string kind, v, m;
      require(!header && (ss >> kind >> v >> m) && kind == "cnf", Errc::ParseError,
              "line " + std::to_string(number) + ": bad problem line");
      out.vars = static_cast<int>(parse_in_range(v, number, 0, 1 << 20));
      expected = parse_in_range(m, number, 0, 1 << 24);
      header = true;
      continue;
    }
    require(header, Errc::ParseError, "line " + std::to_string(number) + ": clause before 'p cnf'");
    do {
      const long long lit = parse_in_range(tok, number, -out.vars, out.vars);
      if (lit == 0) {
        require(!cur.empty(), Errc::ParseError, "line " + std::to_string(number) + ": empty clause");
        out.clauses.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(static_cast<int>(lit));
      }
    } while (ss >> tok);
  }
  require(header, Errc::ParseError, "missing 'p cnf' line");
  require(cur.empty(), Errc::ParseError, "last clause is not terminated by 0");
  require(static_cast<long long>(out.clauses.size()) == expected, Errc::ParseError,
          "expected " + std::to_string(expected) + " clauses, got " + std::to_string(out.clauses.size()));
  return out;
}

inline void write_cnf(std::ostream& out, const Cnf& f) {
  out << "p cnf " << f.vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
}

/// Satisfying assignments of a CNF by enumerating 2^vars assignments.
inline BigInt count_sat(const Cnf& f, std::uint64_t limit = kSolutionSpaceLimit) {
  require(f.vars < 63 && (std::uint64_t{1} << f.vars) <= limit, Errc::TooLarge,
          "2^" + std::to_string(f.vars) + " assignments exceed the enumeration limit");
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << f.vars); ++a) {
    bool ok = true;
    for (const auto& c : f.clauses) {
      bool sat = false;
      for (int lit : c) {
        const bool val = a >> (std::abs(lit) - 1) & 1;
        if (val == (lit > 0)) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        ok = false;
        break;
      }
    }
    count += ok;
  }
  return count;
}

// ---- CSP -----------------------------------------------------------------------

struct CspConstraint {
  std::vector<int> support;              // distinct variable indices
  std::vector<std::vector<int>> permitted;  // value tuples, one entry per support variable

  bool operator==(const CspConstraint&) const = default;
};

/// Variable i takes values 0..domain[i]-1. For a bipartite instance side[i]
/// is 0 or 1 and every constraint has support (side-0 variable, side-1
/// variable); otherwise side is empty.
struct CspInstance {
  std::vector<int> domain;
  std::vector<int> side;
  std::vector<CspConstraint> constraints;

  int vars() const { return static_cast<int>(domain.size()); }
  int max_domain() const {
    int d = 1;
    for (int v : domain) d = std::max(d, v);
    return d;
  }

  bool bipartite() const {
    if (side.size() != domain.size()) return false;
    for (const auto& c : constraints)
      if (c.support.size() != 2 || side[c.support[0]] != 0 || side[c.support[1]] != 1) return false;
    return true;
  }

  void validate() const {
    require(side.empty() || side.size() == domain.size(), Errc::SizeMismatch, "side list length differs");
    for (int v : side) require(v == 0 || v == 1, Errc::InvalidArgument, "side must be 0 or 1");
    for (int d : domain) require(d >= 1, Errc::InvalidArgument, "domains must be nonempty");
    for (std::size_t j = 0; j < constraints.size(); ++j) {
      const auto& c = constraints[j];
      const std::string at = "constraint " + std::to_string(j);
      require(!c.support.empty(), Errc::InvalidArgument, at + " has empty support");
      for (std::size_t a = 0; a < c.support.size(); ++a) {
        require(c.support[a] >= 0 && c.support[a] < vars(), Errc::IndexOutOfRange, at + " names a missing variable");
        for (std::size_t b = 0; b < a; ++b)
          require(c.support[a] != c.support[b], Errc::InvalidArgument, at + " repeats a variable");
      }
      for (const auto& t : c.permitted) {
        require(t.size() == c.support.size(), Errc::SizeMismatch, at + " has a tuple of the wrong length");
        for (std::size_t a = 0; a < t.size(); ++a)
          require(t[a] >= 0 && t[a] < domain[c.support[a]], Errc::IndexOutOfRange,
                  at + " permits a value outside the domain");
      }
    }
  }
};

namespace detail {

/// Backtracking counter. Variables are assigned in the given order; a
/// check fires as soon as the last variable it reads is assigned.
class Backtracker {
 public:
  using Check = std::function<bool(const std::vector<std::uint32_t>&)>;

  Backtracker(std::vector<std::uint32_t> domain, std::vector<int> order)
      : domain_(std::move(domain)), order_(std::move(order)), checks_(order_.size()) {}

  void add(const std::vector<int>& reads, Check check) {
    int last = -1;
    for (int v : reads) {
      const auto pos = std::find(order_.begin(), order_.end(), v) - order_.begin();
      last = std::max(last, static_cast<int>(pos));
    }
    if (last < 0) {
      always_.push_back(std::move(check));
    } else {
      checks_[last].push_back(std::move(check));
    }
  }

  BigInt run() {
    value_.assign(domain_.size(), 0);
    for (const auto& c : always_)
      if (!c(value_)) return 0;
    count_ = 0;
    rec(0);
    return count_;
  }

 private:
  void rec(std::size_t depth) {
    if (depth == order_.size()) {
      ++count_;
      return;
    }
    const int v = order_[depth];
    for (std::uint32_t a = 0; a < domain_[v]; ++a) {
      value_[v] = a;
      bool ok = true;
      for (const auto& c : checks_[depth])
        if (!c(value_)) {
          ok = false;
          break;
        }
      if (ok) rec(depth + 1);
    }
  }

  std::vector<std::uint32_t> domain_;
  std::vector<int> order_;
  std::vector<std::vector<Check>> checks_;
  std::vector<Check> always_;
  std::vector<std::uint32_t> value_;
  std::uint64_t count_ = 0;
};

inline void check_space(const std::vector<std::uint32_t>& domain, std::uint64_t limit) {
  std::uint64_t space = 1;
  for (auto d : domain) {
    require(d == 0 || space <= limit / d, Errc::TooLarge, "solution space exceeds the enumeration limit");
    space *= d;
  }
}

inline std::vector<int> identity_order(std::size_t n) {
  std::vector<int> o(n);
  for (std::size_t i = 0; i < n; ++i) o[i] = static_cast<int>(i);
  return o;
}

}  // namespace detail

/// |SAT| by exhaustive search over the domain product (at most `limit`
/// points), pruning as soon as a constraint is fully assigned.
inline BigInt count_sat(const CspInstance& inst, std::uint64_t limit = kSolutionSpaceLimit) {
  inst.validate();
  std::vector<std::uint32_t> dom(inst.domain.begin(), inst.domain.end());
  detail::check_space(dom, limit);
  detail::Backtracker bt(dom, detail::identity_order(dom.size()));
  for (const auto& c : inst.constraints) {
    // Permitted tuples as a lookup table in mixed radix over the support.
    std::vector<std::size_t> radix;
    std::size_t size = 1;
    for (int v : c.support) {
      radix.push_back(size);
      size *= static_cast<std::size_t>(inst.domain[v]);
    }
    auto table = std::make_shared<std::vector<char>>(size, 0);
    for (const auto& t : c.permitted) {
      std::size_t idx = 0;
      for (std::size_t a = 0; a < t.size(); ++a) idx += radix[a] * static_cast<std::size_t>(t[a]);
      (*table)[idx] = 1;
    }
    bt.add(c.support, [table, radix, sup = c.support](const std::vector<std::uint32_t>& val) {
      std::size_t idx = 0;
      for (std::size_t a = 0; a < sup.size(); ++a) idx += radix[a] * val[sup[a]];
      return (*table)[idx] != 0;
    });
  }
  return bt.run();
}

inline void write_csp(std::ostream& out, const CspInstance& inst) {
  out << "csp " << inst.vars() << ' ' << inst.constraints.size() << '\n';
  for (int i = 0; i < inst.vars(); ++i) {
    out << "var " << i << ' ' << inst.domain[i];
    if (!inst.side.empty()) out << ' ' << (inst.side[i] ? 'y' : 'x');
    out << '\n';
  }
  for (const auto& c : inst.constraints) {
    out << "con " << c.support.size();
    for (int v : c.support) out << ' ' << v;
    out << ' ' << c.permitted.size();
    for (const auto& t : c.permitted)
      for (int a : t) out << ' ' << a;
    out << '\n';
  }
}

inline CspInstance parse_csp(const std::vector<TextLine>& lines) {
  require(!lines.empty(), Errc::ParseError, "empty CSP file");
  const auto& h = lines[0];
  require(h.tokens.size() == 3 && h.tokens[0] == "csp", Errc::ParseError, "line " +
          std::to_string(h.number) + ": expected 'csp <vars> <constraints>'");
  const int v = static_cast<int>(parse_in_range(h.tokens[1], h.number, 0, 1 << 20));
  const long long c = parse_in_range(h.tokens[2], h.number, 0, 1 << 24);
  require(static_cast<long long>(lines.size()) == 1 + v + c, Errc::ParseError,
          "expected " + std::to_string(v) + " var lines and " + std::to_string(c) + " con lines");
  CspInstance inst;
  inst.domain.resize(v);
  int sides = 0;
  for (int i = 0; i < v; ++i) {
    const auto& l = lines[1 + i];
    require((l.tokens.size() == 3 || l.tokens.size() == 4) && l.tokens[0] == "var", Errc::ParseError,
            "line " + std::to_string(l.number) + ": expected 'var <index> <domain> [x|y]'");
    require(parse_in_range(l.tokens[1], l.number, 0, v - 1) == i, Errc::ParseError,
            "line " + std::to_string(l.number) + ": variables must be listed in order");
    inst.domain[i] = static_cast<int>(parse_in_range(l.tokens[2], l.number, 1, 1 << 20));
    if (l.tokens.size() == 4) {
      require(l.tokens[3] == "x" || l.tokens[3] == "y", Errc::ParseError,
              "line " + std::to_string(l.number) + ": side must be x or y");
      if (inst.side.empty()) inst.side.assign(v, 0);
      inst.side[i] = l.tokens[3] == "y";
      ++sides;
    }
  }
  require(sides == 0 || sides == v, Errc::ParseError, "either every variable has a side or none does");
  for (long long j = 0; j < c; ++j) {
    const auto& l = lines[1 + v + j];
    const auto& t = l.tokens;
    const std::string at = "line " + std::to_string(l.number);
    require(t.size() >= 3 && t[0] == "con", Errc::ParseError, at + ": expected 'con <arity> <vars> <count> <tuples>'");
    const auto a = static_cast<std::size_t>(parse_in_range(t[1], l.number, 1, 64));
    require(t.size() >= 3 + a, Errc::ParseError, at + ": truncated support");
    CspConstraint con;
    for (std::size_t i = 0; i < a; ++i)
      con.support.push_back(static_cast<int>(parse_in_range(t[2 + i], l.number, 0, v - 1)));
    const auto n = static_cast<std::size_t>(parse_in_range(t[2 + a], l.number, 0, 1 << 24));
    require(t.size() == 3 + a + n * a, Errc::ParseError, at + ": tuple count does not match");
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<int> tup;
      for (std::size_t i = 0; i < a; ++i)
        tup.push_back(static_cast<int>(parse_ll(t[3 + a + k * a + i], l.number)));
      con.permitted.push_back(std::move(tup));
    }
    inst.constraints.push_back(std::move(con));
  }
  try {
    inst.validate();
  } catch (const Error& e) {
    fail(Errc::ParseError, e.what());
  }
  return inst;
}

inline CspInstance read_csp(std::istream& in) { return parse_csp(read_text_lines(in)); }

// ---- inequation systems -------------------------------------------------------

/// sum_i coeff[i] x_i != rhs.
struct Inequation {
  std::vector<std::uint32_t> coeff;
  std::uint32_t rhs = 0;

  bool operator==(const Inequation&) const = default;
  int arity() const {
    return static_cast<int>(std::count_if(coeff.begin(), coeff.end(), [](auto c) { return c != 0; }));
  }
};

/// Inequations over GF(q) (field set) or over Z_M (modulus set).
struct InequationSystem {
  std::optional<FieldCtx> field;
  std::uint32_t modulus = 0;
  int n = 0;
  std::vector<Inequation> rows;

  static InequationSystem over_field(const FieldCtx& f, int n) {
    InequationSystem s;
    s.field = f;
    s.n = n;
    return s;
  }
  static InequationSystem over_modulus(std::uint32_t m, int n) {
    require(m >= 1, Errc::InvalidArgument, "modulus must be positive");
    InequationSystem s;
    s.modulus = m;
    s.n = n;
    return s;
  }

  bool modular() const { return !field; }
  std::uint32_t domain() const { return field ? field->q() : modulus; }

  bool homogeneous() const {
    return std::all_of(rows.begin(), rows.end(), [](const Inequation& r) { return r.rhs == 0; });
  }
  /// All coefficients in {-1, 0, 1}.
  bool sum() const {
    const std::uint32_t minus = field ? field->neg(field->one()).value : modulus - 1;
    for (const auto& r : rows)
      for (auto c : r.coeff)
        if (c != 0 && c != 1 && c != minus) return false;
    return true;
  }
  int max_arity() const {
    int a = 0;
    for (const auto& r : rows) a = std::max(a, r.arity());
    return a;
  }

  /// Appends the inequation sum terms != rhs, given as (variable, coefficient).
  void add(std::initializer_list<std::pair<int, std::uint32_t>> terms, std::uint32_t rhs = 0) {
    Inequation r;
    r.coeff.assign(n, 0);
    for (auto [v, c] : terms) {
      require(v >= 0 && v < n, Errc::IndexOutOfRange, "inequation names a missing variable");
      r.coeff[v] = c;
    }
    r.rhs = rhs;
    rows.push_back(std::move(r));
  }

  void validate() const {
    require(!field || modulus == 0, Errc::InvalidArgument, "system has both a field and a modulus");
    require(domain() >= 1, Errc::InvalidArgument, "system has no value domain");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const auto& r = rows[j];
      const std::string at = "inequation " + std::to_string(j);
      require(static_cast<int>(r.coeff.size()) == n, Errc::SizeMismatch, at + " has the wrong length");
      require(r.arity() >= 1, Errc::InvalidArgument, at + " has no nonzero coefficient");
      require(r.rhs < domain(), Errc::IndexOutOfRange, at + " has rhs outside the domain");
      for (auto c : r.coeff) require(c < domain(), Errc::IndexOutOfRange, at + " has a coefficient outside the domain");
    }
  }
};

/// |SAT| of an inequation system by exhaustive search over domain^n.
inline BigInt count_sat(const InequationSystem& sys, std::uint64_t limit = kSolutionSpaceLimit) {
  sys.validate();
  std::vector<std::uint32_t> dom(sys.n, sys.domain());
  detail::check_space(dom, limit);
  detail::Backtracker bt(dom, detail::identity_order(dom.size()));
  for (const auto& r : sys.rows) {
    std::vector<int> vars;
    std::vector<std::uint32_t> cs;
    for (int i = 0; i < sys.n; ++i)
      if (r.coeff[i]) {
        vars.push_back(i);
        cs.push_back(r.coeff[i]);
      }
    if (sys.field) {
      bt.add(vars, [f = *sys.field, vars, cs, rhs = r.rhs](const std::vector<std::uint32_t>& val) {
        FieldElem s = f.zero();
        for (std::size_t i = 0; i < vars.size(); ++i) s = f.add(s, f.mul(FieldElem{cs[i]}, FieldElem{val[vars[i]]}));
        return s.value != rhs;
      });
    } else {
      bt.add(vars, [mod = std::uint64_t{sys.modulus}, vars, cs, rhs = r.rhs](const std::vector<std::uint32_t>& val) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < vars.size(); ++i) s = (s + std::uint64_t{cs[i]} * val[vars[i]]) % mod;
        return s != rhs;
      });
    }
  }
  return bt.run();
}

inline void write_inequations(std::ostream& out, const InequationSystem& sys) {
  if (sys.field) {
    out << "ineq gf " << sys.field->p() << ' ' << sys.field->d();
  } else {
    out << "ineq mod " << sys.modulus;
  }
  out << ' ' << sys.n << ' ' << sys.rows.size() << '\n';
  for (const auto& r : sys.rows) {
    for (auto c : r.coeff) out << c << ' ';
    out << r.rhs << '\n';
  }
}

inline InequationSystem parse_inequations(const std::vector<TextLine>& lines) {
  require(!lines.empty(), Errc::ParseError, "empty inequation file");
  const auto& h = lines[0];
  const auto& t = h.tokens;
  const std::string at = "line " + std::to_string(h.number);
  require(t.size() >= 2 && t[0] == "ineq", Errc::ParseError, at + ": expected 'ineq gf p d n c' or 'ineq mod M n c'");
  InequationSystem sys;
  std::size_t next = 0;
  if (t[1] == "gf") {
    require(t.size() == 6, Errc::ParseError, at + ": expected 'ineq gf p d n c'");
    const auto p = static_cast<std::uint32_t>(parse_in_range(t[2], h.number, 2, kMaxFieldOrder));
    const auto d = static_cast<std::uint32_t>(parse_in_range(t[3], h.number, 1, 31));
    try {
      sys.field = FieldCtx(p, d);
    } catch (const Error& e) {
      fail(Errc::ParseError, at + ": " + e.what());
    }
    next = 4;
  } else if (t[1] == "mod") {
    require(t.size() == 5, Errc::ParseError, at + ": expected 'ineq mod M n c'");
    sys.modulus = static_cast<std::uint32_t>(parse_in_range(t[2], h.number, 1, std::uint32_t(-1)));
    next = 3;
  } else {
    fail(Errc::ParseError, at + ": unknown domain '" + t[1] + "'");
  }
  sys.n = static_cast<int>(parse_in_range(t[next], h.number, 0, 1 << 20));
  const long long c = parse_in_range(t[next + 1], h.number, 0, 1 << 24);
  require(static_cast<long long>(lines.size()) == c + 1, Errc::ParseError,
          "expected " + std::to_string(c) + " inequation lines, got " + std::to_string(lines.size() - 1));
  for (long long j = 0; j < c; ++j) {
    const auto& l = lines[1 + j];
    expect_tokens(l, static_cast<std::size_t>(sys.n) + 1);
    Inequation r;
    for (int i = 0; i < sys.n; ++i)
      r.coeff.push_back(static_cast<std::uint32_t>(parse_in_range(l.tokens[i], l.number, 0, sys.domain() - 1)));
    r.rhs = static_cast<std::uint32_t>(parse_in_range(l.tokens[sys.n], l.number, 0, sys.domain() - 1));
    sys.rows.push_back(std::move(r));
  }
  try {
    sys.validate();
  } catch (const Error& e) {
    fail(Errc::ParseError, e.what());
  }
  return sys;
}

inline InequationSystem read_inequations(std::istream& in) { return parse_inequations(read_text_lines(in)); }

}  // namespace tutte

#endif  // TUTTE_CSP_HPP
