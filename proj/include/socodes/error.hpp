// Copyright 2026 The socodes Authors.
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

namespace socodes {

enum class ErrorCode {
  // field-core
  NonPrimeCharacteristic,
  ReducibleModulus,
  InvalidModulus,
  FieldTooLarge,
  InvalidElement,
  DivisionByZero,
  FieldMismatch,
  InvalidBaseOrder,
  OddCharacteristic,
  ZeroInput,
  NotInBaseField,
  NoRegisteredEmbedding,
  DimensionMismatch,
  // linear-code
  RaggedRows,
  NotAnExtensionField,
  LengthMismatch,
  ZeroTwistEntry,
  BudgetExceeded,
  NoNonzeroCodeword,
  // grs
  RepeatedPoints,
  DimensionTooLarge,
  InvalidDimension,
  // elliptic-ag
  SingularCurve,
  PointNotOnCurve,
  DuplicatePoints,
  InfinityInSupport,
  DegreeOutOfRange,
  // quantum-bounds
  NotSelfOrthogonal,
  DualDistanceMismatch,
  DomainError,
  NotASquare,
  // serialization / catalog
  ParseError,
  NotFound,
  IoError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidBaseOrder: return "InvalidBaseOrder";
    case ErrorCode::OddCharacteristic: return "OddCharacteristic";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NotInBaseField: return "NotInBaseField";
    case ErrorCode::NoRegisteredEmbedding: return "NoRegisteredEmbedding";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RaggedRows: return "RaggedRows";
    case ErrorCode::NotAnExtensionField: return "NotAnExtensionField";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ZeroTwistEntry: return "ZeroTwistEntry";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NoNonzeroCodeword: return "NoNonzeroCodeword";
    case ErrorCode::RepeatedPoints: return "RepeatedPoints";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorCode::DuplicatePoints: return "DuplicatePoints";
    case ErrorCode::InfinityInSupport: return "InfinityInSupport";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::NotSelfOrthogonal: return "NotSelfOrthogonal";
    case ErrorCode::DualDistanceMismatch: return "DualDistanceMismatch";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NotASquare: return "NotASquare";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

/// Exception carrying a machine-checkable code next to the human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace socodes
