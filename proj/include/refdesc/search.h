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

// Building candidate descriptions and searching them for a unique one.

#ifndef REFDESC_SEARCH_H_
#define REFDESC_SEARCH_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "refdesc/decode.h"
#include "refdesc/description.h"
#include "refdesc/graph.h"

namespace refdesc {

enum class Strategy {
  kRandom,   // descriptors drawn from all eligible nodes; absences recorded
  kSalient,  // descriptors drawn from the target's out-neighbours
};

std::string_view StrategyName(Strategy strategy);
Strategy ParseStrategy(std::string_view name);

struct CandidateOptions {
  ShapeClass shape = ShapeClass::kFlat;
  Strategy strategy = Strategy::kSalient;
  // Describe the target without its name.
  bool nameless_target = false;
  // Leave every descriptor slot VARIABLE.
  bool variable_slots = false;
  // Intermediate shapes keep only arcs inside consecutive blocks of this
  // many descriptors.
  size_t block_size = 3;
};

// Nodes a description of `target` may use as descriptors, ascending.
// Eligible nodes are the DESCRIPTOR group (every other node when that group
// is empty). SALIENT keeps the target's out-neighbours; for intermediate and
// deep shapes with fewer than `size` of them, nodes adjacent to those
// neighbours are added so that chains can be described.
std::vector<NodeId> DescriptorPool(const Graph &graph, const NameTable &names,
                                   NodeId target, size_t size,
                                   const CandidateOptions &options);

// Description of `target` over the given descriptors, copying the actual
// arcs from the graph. Deep shapes keep at most floor(D^2/2) inter arcs.
Description BuildDescription(const Graph &graph, const NameTable &names,
                             NodeId target, std::vector<NodeId> descriptors,
                             const CandidateOptions &options);

// Throws kNotEnoughNodes, or kNoNeighbors for SALIENT on a target without
// eligible out-neighbours.
Description SampleCandidateDescription(const Graph &graph,
                                       const NameTable &names, NodeId target,
                                       size_t size, const CandidateOptions &options,
                                       uint64_t seed);

// ceil(3 log2 N).
size_t DefaultEnsembleSize(size_t node_count);

struct SearchOptions {
  CandidateOptions candidate;
  // Candidates tried per size; 0 selects DefaultEnsembleSize.
  size_t ensemble_size = 0;
  size_t max_d = 64;
  uint64_t seed = 0;
  DecodeOptions decode;
};

// Tries D = 1, 2, ... and returns the first candidate that decodes UNIQUE.
// At each D, if the pool has at most S subsets of size D they are all
// tried, otherwise S distinct random subsets; either way in ascending
// descriptor-id order. Throws kNoUniqueDescription or kBudgetExceeded.
Description FindShortestUnique(const Graph &graph, const NameTable &names,
                               NodeId target, const SearchOptions &options);

// One landmark set serves every target; each description records the
// target's actual arcs and absences to the landmarks. Landmarks, when not
// given, are drawn from uniquely named non-target nodes.
std::vector<Description> ConstructLandmark(
    const Graph &graph, const NameTable &names,
    const std::vector<NodeId> &targets, size_t size,
    const std::optional<std::vector<NodeId>> &landmarks, uint64_t seed,
    bool nameless_targets = false);

// Deep search with no names at all. Decoding is pure subgraph isomorphism.
Description ConstructStructural(const Graph &graph, NodeId target,
                                size_t ensemble_size, size_t max_d,
                                uint64_t seed,
                                const DecodeOptions &decode = {});

}  // namespace refdesc

#endif  // REFDESC_SEARCH_H_
