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

// Line-oriented text helpers shared by the file formats.

#ifndef TUTTE_TEXT_HPP
#define TUTTE_TEXT_HPP

#include <charconv>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "tutte/error.hpp"

namespace tutte {

/// Tokenized non-empty lines of a stream, skipping lines whose first
/// non-blank character is '#'. Each entry keeps its 1-based line number.
struct TextLine {
  int number = 0;
  std::vector<std::string> tokens;
};

inline std::vector<TextLine> read_text_lines(std::istream& in) {
  std::vector<TextLine> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream ss(line);
    TextLine tl;
    tl.number = number;
    std::string tok;
    while (ss >> tok) {
      if (tl.tokens.empty() && tok[0] == '#') break;
      tl.tokens.push_back(tok);
    }
    if (!tl.tokens.empty()) out.push_back(std::move(tl));
  }
  return out;
}

inline long long parse_ll(const std::string& tok, int line) {
  long long v = 0;
  const char* first = tok.data();
  const char* last = first + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    fail(Errc::ParseError, "line " + std::to_string(line) + ": expected integer, got '" + tok + "'");
  }
  return v;
}

inline long long parse_in_range(const std::string& tok, int line, long long lo, long long hi) {
  const long long v = parse_ll(tok, line);
  require(v >= lo && v <= hi, Errc::ParseError,
          "line " + std::to_string(line) + ": value " + tok + " outside [" +
              std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

inline void expect_tokens(const TextLine& l, std::size_t n) {
  require(l.tokens.size() == n, Errc::ParseError,
          "line " + std::to_string(l.number) + ": expected " + std::to_string(n) +
              " fields, got " + std::to_string(l.tokens.size()));
}

}  // namespace tutte

#endif  // TUTTE_TEXT_HPP
