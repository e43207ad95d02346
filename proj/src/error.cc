// Copyright 2026 The refdesc Authors.
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

#include "refdesc/error.h"

namespace refdesc {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArc: return "InvalidArc";
    case ErrorCode::kDuplicateArc: return "DuplicateArc";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kInvalidNameTable: return "InvalidNameTable";
    case ErrorCode::kUnknownName: return "UnknownName";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kUnboundDescriptor: return "UnboundDescriptor";
    case ErrorCode::kEmptyEnsemble: return "EmptyEnsemble";
    case ErrorCode::kNodeSetMismatch: return "NodeSetMismatch";
    case ErrorCode::kNotEnoughNodes: return "NotEnoughNodes";
    case ErrorCode::kNoNeighbors: return "NoNeighbors";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kNoUniqueDescription: return "NoUniqueDescription";
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kInfeasibleBound: return "InfeasibleBound";
    case ErrorCode::kGraphTooLarge: return "GraphTooLarge";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace refdesc
