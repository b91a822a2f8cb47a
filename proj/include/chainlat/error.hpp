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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chainlat {

enum class Errc {
  // poset
  CycleDetected,
  RedundantCover,
  UnknownElement,
  DuplicateElement,
  NotRanked,
  NoBottom,
  NotComparable,
  // polyring
  DivisionByZero,
  NotDivisible,
  MissingAssignment,
  // chains
  InvalidLabeling,
  InvalidAtomOrder,
  // determinant
  NonZeroOffBlock,
  TooLarge,
  NotABouquet,
  NegativeExponent,
  // matroid
  EmptySetMissing,
  NotDownwardClosed,
  ExchangeFails,
  NotSimple,
  NotAClutter,
  RoofNotMatroid,
  UnionMismatch,
  ExchangeAcrossRoofsFails,
  BouquetCheckFailed,
  // com
  GroundMismatch,
  InvalidSign,
  DuplicateCovector,
  FSViolation,
  SEViolation,
  NotACovector,
  NotValidated,
  // io
  ParseError,
};

constexpr std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::RedundantCover: return "RedundantCover";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::DuplicateElement: return "DuplicateElement";
    case Errc::NotRanked: return "NotRanked";
    case Errc::NoBottom: return "NoBottom";
    case Errc::NotComparable: return "NotComparable";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::MissingAssignment: return "MissingAssignment";
    case Errc::InvalidLabeling: return "InvalidLabeling";
    case Errc::InvalidAtomOrder: return "InvalidAtomOrder";
    case Errc::NonZeroOffBlock: return "NonZeroOffBlock";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotABouquet: return "NotABouquet";
    case Errc::NegativeExponent: return "NegativeExponent";
    case Errc::EmptySetMissing: return "EmptySetMissing";
    case Errc::NotDownwardClosed: return "NotDownwardClosed";
    case Errc::ExchangeFails: return "ExchangeFails";
    case Errc::NotSimple: return "NotSimple";
    case Errc::NotAClutter: return "NotAClutter";
    case Errc::RoofNotMatroid: return "RoofNotMatroid";
    case Errc::UnionMismatch: return "UnionMismatch";
    case Errc::ExchangeAcrossRoofsFails: return "ExchangeAcrossRoofsFails";
    case Errc::BouquetCheckFailed: return "BouquetCheckFailed";
    case Errc::GroundMismatch: return "GroundMismatch";
    case Errc::InvalidSign: return "InvalidSign";
    case Errc::DuplicateCovector: return "DuplicateCovector";
    case Errc::FSViolation: return "FSViolation";
    case Errc::SEViolation: return "SEViolation";
    case Errc::NotACovector: return "NotACovector";
    case Errc::NotValidated: return "NotValidated";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this exception. The
/// witness holds the offending identifiers (elements, covectors, sets) when
/// the failure is a violated axiom.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message,
        std::vector<std::string> witness = {})
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  Errc code() const noexcept { return code_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::vector<std::string> witness_;
};

}  // namespace chainlat
