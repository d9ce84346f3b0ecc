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


// Selector over the three rank-size table algorithms.

#ifndef TUTTE_ALGORITHMS_HPP
#define TUTTE_ALGORITHMS_HPP

#include <string>
#include <string_view>

#include "tutte/lexgen.hpp"
#include "tutte/tutte_core.hpp"
#include "tutte/wt2.hpp"

namespace tutte {

enum class TutteAlgorithm { Definition, General, Wt2 };

inline std::string_view algorithm_name(TutteAlgorithm a) {
  switch (a) {
    case TutteAlgorithm::Definition: return "def";
    case TutteAlgorithm::General: return "general";
    case TutteAlgorithm::Wt2: return "wt2";
  }
  return "?";
}

inline TutteAlgorithm parse_algorithm(std::string_view name) {
  if (name == "def") return TutteAlgorithm::Definition;
  if (name == "general") return TutteAlgorithm::General;
  if (name == "wt2") return TutteAlgorithm::Wt2;
  fail(Errc::InvalidArgument, "unknown algorithm '" + std::string(name) + "' (def, general, wt2)");
}

/// True when `algo` accepts `mat` without a guard violation.
inline bool algorithm_applies(TutteAlgorithm algo, const FqMatrix& mat) {
  switch (algo) {
    case TutteAlgorithm::Definition: return mat.m() <= kBruteForceMaxColumns;
    case TutteAlgorithm::General: return true;
    case TutteAlgorithm::Wt2:
      if (mat.k() > 62 || max_col_weight(mat) > 2) return false;
      for (int c = 0; c < mat.m(); ++c)
        if (mat.col_weight(c) == 0) return false;
      return true;
  }
  return false;
}

struct AlgorithmStats {
  std::uint64_t lexgen_visited = 0;
  Wt2Stats wt2;
};

inline RankSizeTable compute_tau(const FqMatrix& mat, TutteAlgorithm algo, int threads = 1,
                                 AlgorithmStats* stats = nullptr) {
  switch (algo) {
    case TutteAlgorithm::Definition: return tutte_bruteforce(mat, threads);
    case TutteAlgorithm::General: {
      LexgenStats st;
      auto t = tutte_lexgen(mat, &st, threads);
      if (stats) stats->lexgen_visited = st.visited;
      return t;
    }
    case TutteAlgorithm::Wt2: return tutte_wt2(mat, stats ? &stats->wt2 : nullptr);
  }
  fail(Errc::InvalidArgument, "unknown algorithm");
}

}  // namespace tutte

#endif  // TUTTE_ALGORITHMS_HPP
