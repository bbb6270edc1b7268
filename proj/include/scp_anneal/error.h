// Copyright 2026 The scp_anneal Authors
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

#ifndef SCP_ANNEAL_ERROR_H_
#define SCP_ANNEAL_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace scp_anneal {

enum class ErrorCode {
  kConfigInfeasible,
  kElementOutOfRange,
  kLengthMismatch,
  kParseError,
  kInvariantViolation,
  kIndexOutOfRange,
  kDuplicateIndexInTerm,
  kDegreeTooHigh,
  kPenaltyTooSmall,
  kInvalidInstance,
  kInvalidPenalty,
  kTooManyVariables,
  kInvalidParams,
  kInvalidConfig,
  kMissingBaseline,
  kZeroBaselineCost,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (and tests) can dispatch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace scp_anneal

#endif  // SCP_ANNEAL_ERROR_H_
