// Copyright 2026 The Cavepoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CAVEPOLY_ERRORS_H_
#define CAVEPOLY_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cavepoly {

enum class ErrorCode {
  kAxiomViolation,
  kDimensionMismatch,
  kEmptyInput,
  kNotMConvex,
  kNotInIndependence,
  kNotABasePoint,
  kNotComparable,
  kNegativeExponent,
  kOverflow,
  kInternalInvariantFailure,
  kGenerationExhausted,
  kUnknownFamily,
  kParseError,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this type. The message carries
// the witness (subsets, points, indices) when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cavepoly

#endif  // CAVEPOLY_ERRORS_H_
