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

// Seeded random graph families and the two-group naming scheme.

#ifndef REFDESC_GENERATORS_H_
#define REFDESC_GENERATORS_H_

#include <cstdint>
#include <optional>

#include "refdesc/graph.h"

namespace refdesc {

struct GeneratorConfig {
  GraphKind kind = GraphKind::kErdosRenyi;
  size_t node_count = 1000;
  double arc_probability = 0.01;
  // Number of labels in the alphabet ("L", "L1", ...). A present arc gets a
  // uniformly drawn label.
  size_t label_count = 1;
  // CLUSTERED only. Unset values take the defaults (10 clusters, N pairs)
  // and are recorded in the graph metadata notes.
  std::optional<size_t> cluster_count;
  std::optional<size_t> inter_cluster_pairs;
  uint64_t seed = 0;
};

// Throws kInvalidConfig if the config is malformed.
void ValidateGeneratorConfig(const GeneratorConfig &config);

Graph GenerateGraph(const GeneratorConfig &config);

struct NamingConfig {
  double described_nodes_per_name = 1.0;
  double descriptor_nodes_per_name = 1.0;
  double described_fraction = 0.5;
  uint64_t seed = 0;
};

// Splits nodes into DESCRIBED and DESCRIPTOR groups and batches each group
// into equal-weight names. A fractional target k mixes name sizes floor(k)
// and floor(k)+1 so that the node-weighted mean of log2(size) is log2(k).
//
// The group split and the node order within each group depend only on the
// seed and graph, not on the nodes-per-name targets, so tables built for
// different targets from the same seed nest into each other.
NameTable AssignNames(const Graph &graph, const NamingConfig &config);

// Receiver view that diverges from `graph`: every ordered pair's arc
// indicator is flipped independently with probability `flip_rate` (removed
// arcs drop all labels; added arcs get a uniform label).
Graph FlipArcs(const Graph &graph, double flip_rate, uint64_t seed);

}  // namespace refdesc

#endif  // REFDESC_GENERATORS_H_
