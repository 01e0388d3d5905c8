// Copyright 2026 The sumprod Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sumprod {

enum class ErrorCode {
  InvalidArgument,
  NotAUnit,
  WrongKind,
  TooLarge,
  ParseError,
  DegreeTooLarge,
  ConstantPolynomial,
  DegenerateInput,
  LinearFactorPresent,
  ZeroFrequency,
  EvenModulus,
  NotInOmega,
  NotSymmetric,
  DivisionByZero,
  EmptyCorpus,
  // A proven inequality or internal identity failed to hold.
  TheoremViolation,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::LinearFactorPresent: return "LinearFactorPresent";
    case ErrorCode::ZeroFrequency: return "ZeroFrequency";
    case ErrorCode::EvenModulus: return "EvenModulus";
    case ErrorCode::NotInOmega: return "NotInOmega";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorCode::ParseError, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace sumprod
