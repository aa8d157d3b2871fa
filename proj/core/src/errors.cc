// Copyright 2026 The qcodon Authors
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

#include "qcodon/errors.h"

namespace qcodon {

ErrorCategory CategoryOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTooManyVariables:
    case ErrorCode::kTooManyQubits:
    case ErrorCode::kSearchSpaceTooLarge:
      return ErrorCategory::kResourceLimit;
    case ErrorCode::kIoError:
    case ErrorCode::kNetworkError:
    case ErrorCode::kNotFound:
    case ErrorCode::kNonFastaResponse:
      return ErrorCategory::kIo;
    default:
      return ErrorCategory::kValidation;
  }
}

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptySequence: return "EmptySequence";
    case ErrorCode::kUnknownResidue: return "UnknownResidue";
    case ErrorCode::kMalformedHeader: return "MalformedHeader";
    case ErrorCode::kInvalidCodon: return "InvalidCodon";
    case ErrorCode::kUnknownCodon: return "UnknownCodon";
    case ErrorCode::kNegativeFrequency: return "NegativeFrequency";
    case ErrorCode::kAllZeroFamily: return "AllZeroFamily";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kSchemeMismatch: return "SchemeMismatch";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kParameterCountMismatch: return "ParameterCountMismatch";
    case ErrorCode::kNonFiniteScalar: return "NonFiniteScalar";
    case ErrorCode::kNonFiniteObjective: return "NonFiniteObjective";
    case ErrorCode::kZeroQubits: return "ZeroQubits";
    case ErrorCode::kEmptyAfterTrim: return "EmptyAfterTrim";
    case ErrorCode::kTooManyVariables: return "TooManyVariables";
    case ErrorCode::kTooManyQubits: return "TooManyQubits";
    case ErrorCode::kSearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kNetworkError: return "NetworkError";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kNonFastaResponse: return "NonFastaResponse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

UnknownResidueError::UnknownResidueError(char letter, std::size_t position)
    : Error(ErrorCode::kUnknownResidue,
            std::string("'") + letter + "' at position " +
                std::to_string(position)),
      letter_(letter),
      position_(position) {}

}  // namespace qcodon
