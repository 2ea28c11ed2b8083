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

#include "cavepoly/errors.h"

namespace cavepoly {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kAxiomViolation:
      return "AxiomViolation";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kEmptyInput:
      return "EmptyInput";
    case ErrorCode::kNotMConvex:
      return "NotMConvex";
    case ErrorCode::kNotInIndependence:
      return "NotInIndependence";
    case ErrorCode::kNotABasePoint:
      return "NotABasePoint";
    case ErrorCode::kNotComparable:
      return "NotComparable";
    case ErrorCode::kNegativeExponent:
      return "NegativeExponent";
    case ErrorCode::kOverflow:
      return "Overflow";
    case ErrorCode::kInternalInvariantFailure:
      return "InternalInvariantFailure";
    case ErrorCode::kGenerationExhausted:
      return "GenerationExhausted";
    case ErrorCode::kUnknownFamily:
      return "UnknownFamily";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace cavepoly
