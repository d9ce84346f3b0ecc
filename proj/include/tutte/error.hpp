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

#ifndef TUTTE_ERROR_HPP
#define TUTTE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace tutte {

enum class Errc {
  NotPrime,
  TooLarge,
  DivisionByZero,
  CharMismatch,
  IndexOutOfRange,
  TooManyColumns,
  RankDeficient,
  SizeMismatch,
  InternalError,
  WeightTooHigh,
  ZeroColumn,
  UnusedVariable,
  NotBipartite,
  ModulusTooSmall,
  OrderMismatch,
  NoSidonSet,
  Inhomogeneous,
  ParseError,
  InvalidArgument,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::TooLarge: return "TooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::CharMismatch: return "CharMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::TooManyColumns: return "TooManyColumns";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::InternalError: return "InternalError";
    case Errc::WeightTooHigh: return "WeightTooHigh";
    case Errc::ZeroColumn: return "ZeroColumn";
    case Errc::UnusedVariable: return "UnusedVariable";
    case Errc::NotBipartite: return "NotBipartite";
    case Errc::ModulusTooSmall: return "ModulusTooSmall";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::NoSidonSet: return "NoSidonSet";
    case Errc::Inhomogeneous: return "Inhomogeneous";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// The single exception type thrown by the library. `code()` identifies the
/// failure class; `what()` carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) {
  throw Error(code, detail);
}

inline void require(bool cond, Errc code, const std::string& detail) {
  if (!cond) fail(code, detail);
}

}  // namespace tutte

#endif  // TUTTE_ERROR_HPP
