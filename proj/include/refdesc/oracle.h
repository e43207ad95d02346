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

// Exhaustive reference implementations for small graphs. They share no
// search or pruning code with the production decoder and search.

#ifndef REFDESC_ORACLE_H_
#define REFDESC_ORACLE_H_

#include "refdesc/decode.h"
#include "refdesc/description.h"
#include "refdesc/graph.h"
#include "refdesc/search.h"

namespace refdesc {

inline constexpr size_t kOracleMaxNodes = 30;

// Decodes by enumerating every name-consistent binding of every slot
// (injective for non-flat shapes) and checking all arcs at the leaves.
// Exponential in D.
ResolutionResult NaiveDecode(const Description &desc, const Graph &graph,
                             const NameTable &names);

// Minimum-D unique description over every descriptor subset of the pool
// used by FindShortestUnique; for deep shapes every admissible choice of
// inter arcs is tried. Ties go to the lowest descriptor-id tuple.
// Throws kGraphTooLarge above kOracleMaxNodes and kNoUniqueDescription.
Description BruteForceShortest(const Graph &graph, const NameTable &names,
                               NodeId target, const CandidateOptions &options);

}  // namespace refdesc

#endif  // REFDESC_ORACLE_H_
