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

#ifndef REFDESC_ERROR_H_
#define REFDESC_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace refdesc {

enum class ErrorCode {
  kInvalidArc,
  kDuplicateArc,
  kInvalidConfig,
  kInvalidNameTable,
  kUnknownName,
  kEmptyInput,
  kUnboundDescriptor,
  kEmptyEnsemble,
  kNodeSetMismatch,
  kNotEnoughNodes,
  kNoNeighbors,
  kBudgetExceeded,
  kNoUniqueDescription,
  kInvalidInput,
  kInfeasibleBound,
  kGraphTooLarge,
  kConfigError,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type. The code
// lets callers branch on the failure kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace refdesc

#endif  // REFDESC_ERROR_H_
