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


// Plain odometer counters, variables stepped in reverse order, with no
// pruning. They share no code with the library's search.

#ifndef TUTTE_TESTS_CSP_ORACLES_HPP
#define TUTTE_TESTS_CSP_ORACLES_HPP

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "tutte/csp.hpp"

namespace csp_oracle {

using tutte::FieldElem;

// Calls visit(values) for every point of prod domain[i], with the highest
// index varying fastest.
template <class F>
void for_each_point(const std::vector<std::uint32_t>& domain, F&& visit) {
  std::vector<std::uint32_t> val(domain.size(), 0);
  for (auto d : domain)
    if (d == 0) return;
  for (;;) {
    visit(val);
    std::size_t i = domain.size();
    for (;;) {
      if (i == 0) return;
      --i;
      if (++val[i] < domain[i]) break;
      val[i] = 0;
    }
  }
}

inline long long count_cnf(const tutte::Cnf& f) {
  long long total = 0;
  for_each_point(std::vector<std::uint32_t>(f.vars, 2), [&](const std::vector<std::uint32_t>& v) {
    for (const auto& c : f.clauses) {
      bool sat = false;
      for (int lit : c) sat = sat || (v[std::abs(lit) - 1] == (lit > 0 ? 1u : 0u));
      if (!sat) return;
    }
    ++total;
  });
  return total;
}

inline long long count_csp(const tutte::CspInstance& inst) {
  long long total = 0;
  std::vector<std::uint32_t> dom(inst.domain.begin(), inst.domain.end());
  for_each_point(dom, [&](const std::vector<std::uint32_t>& v) {
    for (const auto& c : inst.constraints) {
      bool found = false;
      for (const auto& t : c.permitted) {
        bool eq = true;
        for (std::size_t a = 0; a < t.size(); ++a) eq = eq && v[c.support[a]] == static_cast<std::uint32_t>(t[a]);
        if (eq) {
          found = true;
          break;
        }
      }
      if (!found) return;
    }
    ++total;
  });
  return total;
}

inline long long count_inequations(const tutte::InequationSystem& sys) {
  long long total = 0;
  for_each_point(std::vector<std::uint32_t>(sys.n, sys.domain()), [&](const std::vector<std::uint32_t>& v) {
    for (const auto& r : sys.rows) {
      std::uint64_t s = 0;
      if (sys.field) {
        FieldElem acc{0};
        for (int i = 0; i < sys.n; ++i) acc = sys.field->add(acc, sys.field->mul(FieldElem{r.coeff[i]}, FieldElem{v[i]}));
        s = acc.value;
      } else {
        for (int i = 0; i < sys.n; ++i) s = (s + std::uint64_t{r.coeff[i]} * v[i]) % sys.modulus;
      }
      if (s == r.rhs) return;
    }
    ++total;
  });
  return total;
}

}  // namespace csp_oracle

#endif  // TUTTE_TESTS_CSP_ORACLES_HPP
