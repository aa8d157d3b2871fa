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

#ifndef QCODON_ERRORS_H_
#define QCODON_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qcodon {

enum class ErrorCode {
  // Input validation.
  kEmptySequence,
  kUnknownResidue,
  kMalformedHeader,
  kInvalidCodon,
  kUnknownCodon,
  kNegativeFrequency,
  kAllZeroFamily,
  kInvalidArgument,
  kIndexOutOfRange,
  kSchemeMismatch,
  kLengthMismatch,
  kDimensionMismatch,
  kParameterCountMismatch,
  kNonFiniteScalar,
  kNonFiniteObjective,
  kZeroQubits,
  kEmptyAfterTrim,
  // Resource limits.
  kTooManyVariables,
  kTooManyQubits,
  kSearchSpaceTooLarge,
  // I/O and network.
  kIoError,
  kNetworkError,
  kNotFound,
  kNonFastaResponse,
};

/// Coarse grouping used by the CLI to pick an exit code.
enum class ErrorCategory { kValidation, kResourceLimit, kIo };

ErrorCategory CategoryOf(ErrorCode code);
std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }
  ErrorCategory category() const { return CategoryOf(code_); }

 private:
  ErrorCode code_;
};

class UnknownResidueError : public Error {
 public:
  UnknownResidueError(char letter, std::size_t position);

  char letter() const { return letter_; }
  std::size_t position() const { return position_; }

 private:
  char letter_;
  std::size_t position_;
};

}  // namespace qcodon

#endif  // QCODON_ERRORS_H_
