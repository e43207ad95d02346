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

// Directed labeled graph and the name table that maps ambiguous names onto
// its nodes. Both are immutable once built and safe to share across threads.

#ifndef REFDESC_GRAPH_H_
#define REFDESC_GRAPH_H_

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace refdesc {

using NodeId = uint32_t;
using LabelId = uint16_t;

// Pseudo-label for "no arc of any label between the two nodes". It is never
// stored in a Graph; descriptions use it to state absences.
inline constexpr LabelId kAbsent = 0xFFFF;

struct Arc {
  NodeId src = 0;
  LabelId label = 0;
  NodeId dst = 0;

  friend auto operator<=>(const Arc &, const Arc &) = default;
};

// One entry of an adjacency list: the node on the other end and the label.
struct Neighbor {
  NodeId node = 0;
  LabelId label = 0;

  friend auto operator<=>(const Neighbor &, const Neighbor &) = default;
};

enum class GraphKind { kManual, kErdosRenyi, kBipartite, kClustered };

std::string_view GraphKindName(GraphKind kind);
GraphKind ParseGraphKind(std::string_view name);

// Generator provenance. Defaults chosen by a generator (rather than by the
// caller) are listed in `notes`.
struct GraphMetadata {
  GraphKind kind = GraphKind::kManual;
  double arc_probability = 0.0;
  size_t cluster_count = 0;
  size_t inter_cluster_pairs = 0;
  uint64_t seed = 0;
  std::vector<std::string> notes;
};

class Graph {
 public:
  // Validates and indexes the arcs. Throws kInvalidArc for out-of-range ids
  // or labels and kDuplicateArc for repeated triples.
  static Graph Build(size_t node_count, std::vector<std::string> labels,
                     std::vector<Arc> arcs, GraphMetadata metadata = {});

  size_t node_count() const { return node_count_; }
  size_t arc_count() const { return out_.size(); }
  const std::vector<std::string> &labels() const { return labels_; }
  const GraphMetadata &metadata() const { return metadata_; }

  std::optional<LabelId> FindLabel(std::string_view name) const;

  bool HasArc(NodeId src, LabelId label, NodeId dst) const;
  bool HasAnyArc(NodeId src, NodeId dst) const;

  // True if src stands in `label` to dst; for kAbsent, true if no arc of any
  // label goes from src to dst.
  bool Holds(NodeId src, LabelId label, NodeId dst) const {
    return label == kAbsent ? !HasAnyArc(src, dst) : HasArc(src, label, dst);
  }

  // Sorted by (node, label).
  std::span<const Neighbor> Out(NodeId node) const {
    return {out_.data() + out_offsets_[node],
            out_.data() + out_offsets_[node + 1]};
  }
  std::span<const Neighbor> In(NodeId node) const {
    return {in_.data() + in_offsets_[node], in_.data() + in_offsets_[node + 1]};
  }

  // All arcs sorted by (src, label, dst).
  std::vector<Arc> Arcs() const;

 private:
  Graph() = default;

  size_t node_count_ = 0;
  std::vector<std::string> labels_;
  GraphMetadata metadata_;
  std::vector<size_t> out_offsets_;
  std::vector<Neighbor> out_;
  std::vector<size_t> in_offsets_;
  std::vector<Neighbor> in_;
};

enum class NodeGroup : uint8_t { kDescribed, kDescriptor };

struct NameCandidate {
  NodeId node = 0;
  double weight = 0.0;
};

// Names with weighted candidate nodes. Every node carries exactly one name;
// a name's weights are positive and sum to one.
class NameTable {
 public:
  // `groups` may be empty, in which case every node is kDescribed.
  // Throws kInvalidNameTable when an invariant is violated.
  static NameTable Build(
      size_t node_count,
      std::map<std::string, std::vector<NameCandidate>> entries,
      std::vector<NodeGroup> groups = {});

  // Node i is named "n<i>".
  static NameTable Unique(size_t node_count);

  // Every node shares the single sentinel name "_".
  static NameTable Nameless(size_t node_count);

  size_t node_count() const { return name_of_.size(); }
  size_t name_count() const { return names_.size(); }

  // Empty span for unknown names.
  std::span<const NameCandidate> Lookup(std::string_view name) const;

  std::optional<size_t> IndexOf(std::string_view name) const;
  const std::string &name(size_t index) const { return names_[index]; }
  std::span<const NameCandidate> candidates(size_t index) const {
    return candidates_[index];
  }

  size_t NameIndexOf(NodeId node) const { return name_of_[node]; }
  const std::string &NameOf(NodeId node) const {
    return names_[name_of_[node]];
  }

  NodeGroup GroupOf(NodeId node) const { return groups_[node]; }
  std::vector<NodeId> NodesIn(NodeGroup group) const;

 private:
  NameTable() = default;

  std::vector<std::string> names_;  // sorted
  std::vector<std::vector<NameCandidate>> candidates_;
  std::vector<uint32_t> name_of_;
  std::vector<NodeGroup> groups_;
};

struct GraphStats {
  double average_degree = 0.0;  // mean out-degree
  double arc_density = 0.0;     // |arcs| / (N (N - 1))
  double entropy_rate = 0.0;    // bits per adjacency entry
};

// The entropy rate is the empirical entropy of the per-ordered-pair symbol
// (the set of labels present, possibly empty). With one label this is the
// binary entropy of the arc density.
GraphStats ComputeGraphStats(const Graph &graph);

// Binary entropy in bits; 0 at the endpoints.
double BinaryEntropy(double p);

// JSON interchange. Arcs are written sorted so output is byte-stable.
nlohmann::json GraphToJson(const Graph &graph, const NameTable *names);
std::string SerializeGraph(const Graph &graph, const NameTable *names);

struct LoadedGraph {
  Graph graph;
  std::optional<NameTable> names;
};

// Throws kParseError on malformed documents.
LoadedGraph GraphFromJson(const nlohmann::json &doc);
LoadedGraph LoadGraphFile(const std::filesystem::path &path);

}  // namespace refdesc

#endif  // REFDESC_GRAPH_H_
