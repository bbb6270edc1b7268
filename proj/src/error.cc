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

#include "scp_anneal/error.h"

namespace scp_anneal {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kConfigInfeasible:
      return "ConfigInfeasible";
    case ErrorCode::kElementOutOfRange:
      return "ElementOutOfRange";
    case ErrorCode::kLengthMismatch:
      return "LengthMismatch";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kInvariantViolation:
      return "InvariantViolation";
    case ErrorCode::kIndexOutOfRange:
      return "IndexOutOfRange";
    case ErrorCode::kDuplicateIndexInTerm:
      return "DuplicateIndexInTerm";
    case ErrorCode::kDegreeTooHigh:
      return "DegreeTooHigh";
    case ErrorCode::kPenaltyTooSmall:
      return "PenaltyTooSmall";
    case ErrorCode::kInvalidInstance:
      return "InvalidInstance";
    case ErrorCode::kInvalidPenalty:
      return "InvalidPenalty";
    case ErrorCode::kTooManyVariables:
      return "TooManyVariables";
    case ErrorCode::kInvalidParams:
      return "InvalidParams";
    case ErrorCode::kInvalidConfig:
      return "InvalidConfig";
    case ErrorCode::kMissingBaseline:
      return "MissingBaseline";
    case ErrorCode::kZeroBaselineCost:
      return "ZeroBaselineCost";
    case ErrorCode::kIoError:
      return "IoError";
  }
  return "Unknown";
}

}  // namespace scp_anneal
