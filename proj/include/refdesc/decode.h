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

// Resolution of a description against a receiver's graph and names.
//
// Flat descriptions resolve each descriptor independently per candidate
// target. Intermediate and deep descriptions need a joint, injective binding
// of all slots, found by backtracking (a subgraph isomorphism search rooted
// at the target).

#ifndef REFDESC_DECODE_H_
#define REFDESC_DECODE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "refdesc/description.h"
#include "refdesc/graph.h"

namespace refdesc {

enum class ResolutionStatus { kUnique, kAmbiguous, kNone };

std::string_view ResolutionStatusName(ResolutionStatus status);

struct ResolutionResult {
  ResolutionStatus status = ResolutionStatus::kNone;
  // UNIQUE: the target and one satisfying descriptor binding.
  std::optional<NodeId> target;
  std::vector<NodeId> bindings;
  // Every target found so far, ascending. Stops growing at the cap.
  std::vector<NodeId> candidates;
  bool truncated = false;
  // Candidate node checks performed.
  uint64_t work = 0;
  // Set for NONE caused by unknown names.
  std::string reason;
};

struct DecodeOptions {
  // Node expansions before kBudgetExceeded is thrown.
  uint64_t budget = 10'000'000;
  // Stop after this many satisfying targets (0: find all).
  size_t candidate_cap = 0;
};

ResolutionResult Decode(const Description &desc, const Graph &graph,
                        const NameTable &names,
                        const DecodeOptions &options = {});

}  // namespace refdesc

#endif  // REFDESC_DECODE_H_
