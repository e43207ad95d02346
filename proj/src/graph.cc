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

#include "refdesc/graph.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include "refdesc/error.h"

namespace refdesc {

using nlohmann::json;

std::string_view GraphKindName(GraphKind kind) {
  switch (kind) {
    case GraphKind::kManual: return "manual";
    case GraphKind::kErdosRenyi: return "erdos_renyi";
    case GraphKind::kBipartite: return "bipartite";
    case GraphKind::kClustered: return "clustered";
  }
  return "manual";
}

GraphKind ParseGraphKind(std::string_view name) {
  if (name == "manual") return GraphKind::kManual;
  if (name == "erdos_renyi" || name == "er") return GraphKind::kErdosRenyi;
  if (name == "bipartite") return GraphKind::kBipartite;
  if (name == "clustered") return GraphKind::kClustered;
  throw Error(ErrorCode::kParseError,
              "unknown graph kind '" + std::string(name) + "'");
}

Graph Graph::Build(size_t node_count, std::vector<std::string> labels,
                   std::vector<Arc> arcs, GraphMetadata metadata) {
  if (node_count == 0) {
    throw Error(ErrorCode::kInvalidArc, "graph needs at least one node");
  }
  if (node_count > std::numeric_limits<NodeId>::max()) {
    throw Error(ErrorCode::kInvalidArc, "too many nodes");
  }
  if (labels.size() >= kAbsent) {
    throw Error(ErrorCode::kInvalidArc, "label alphabet too large");
  }
  for (const Arc &a : arcs) {
    if (a.src >= node_count || a.dst >= node_count) {
      throw Error(ErrorCode::kInvalidArc,
                  "arc (" + std::to_string(a.src) + "," +
                      std::to_string(a.label) + "," + std::to_string(a.dst) +
                      ") references a node outside [0," +
                      std::to_string(node_count) + ")");
    }
    if (a.label >= labels.size()) {
      throw Error(ErrorCode::kInvalidArc,
                  "arc label " + std::to_string(a.label) + " not in alphabet");
    }
    if (a.src == a.dst) {
      throw Error(ErrorCode::kInvalidArc,
                  "self-loop at node " + std::to_string(a.src));
    }
  }
  std::sort(arcs.begin(), arcs.end());
  auto dup = std::adjacent_find(arcs.begin(), arcs.end());
  if (dup != arcs.end()) {
    throw Error(ErrorCode::kDuplicateArc,
                "arc (" + std::to_string(dup->src) + "," +
                    std::to_string(dup->label) + "," +
                    std::to_string(dup->dst) + ") appears twice");
  }

  Graph g;
  g.node_count_ = node_count;
  g.labels_ = std::move(labels);
  g.metadata_ = std::move(metadata);

  g.out_offsets_.assign(node_count + 1, 0);
  g.in_offsets_.assign(node_count + 1, 0);
  for (const Arc &a : arcs) {
    ++g.out_offsets_[a.src + 1];
    ++g.in_offsets_[a.dst + 1];
  }
  for (size_t i = 0; i < node_count; ++i) {
    g.out_offsets_[i + 1] += g.out_offsets_[i];
    g.in_offsets_[i + 1] += g.in_offsets_[i];
  }
  g.out_.resize(arcs.size());
  g.in_.resize(arcs.size());
  std::vector<size_t> out_pos(g.out_offsets_.begin(), g.out_offsets_.end() - 1);
  std::vector<size_t> in_pos(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  for (const Arc &a : arcs) {
    g.out_[out_pos[a.src]++] = {a.dst, a.label};
    g.in_[in_pos[a.dst]++] = {a.src, a.label};
  }
  for (size_t i = 0; i < node_count; ++i) {
    std::sort(g.out_.begin() + g.out_offsets_[i],
              g.out_.begin() + g.out_offsets_[i + 1]);
    std::sort(g.in_.begin() + g.in_offsets_[i],
              g.in_.begin() + g.in_offsets_[i + 1]);
  }
  return g;
}

std::optional<LabelId> Graph::FindLabel(std::string_view name) const {
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == name) return static_cast<LabelId>(i);
  }
  return std::nullopt;
}

bool Graph::HasArc(NodeId src, LabelId label, NodeId dst) const {
  auto out = Out(src);
  return std::binary_search(out.begin(), out.end(), Neighbor{dst, label});
}

bool Graph::HasAnyArc(NodeId src, NodeId dst) const {
  auto out = Out(src);
  auto it = std::lower_bound(out.begin(), out.end(), Neighbor{dst, 0});
  return it != out.end() && it->node == dst;
}

std::vector<Arc> Graph::Arcs() const {
  std::vector<Arc> arcs;
  arcs.reserve(out_.size());
  for (NodeId u = 0; u < node_count_; ++u) {
    for (const Neighbor &n : Out(u)) arcs.push_back({u, n.label, n.node});
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

NameTable NameTable::Build(
    size_t node_count,
    std::map<std::string, std::vector<NameCandidate>> entries,
    std::vector<NodeGroup> groups) {
  constexpr uint32_t kUnset = std::numeric_limits<uint32_t>::max();
  NameTable t;
  t.name_of_.assign(node_count, kUnset);
  if (groups.empty()) groups.assign(node_count, NodeGroup::kDescribed);
  if (groups.size() != node_count) {
    throw Error(ErrorCode::kInvalidNameTable,
                "group tags must cover every node");
  }
  t.groups_ = std::move(groups);
  for (auto &[name, cands] : entries) {
    if (cands.empty()) {
      throw Error(ErrorCode::kInvalidNameTable,
                  "name '" + name + "' has no candidates");
    }
    double total = 0.0;
    const uint32_t index = static_cast<uint32_t>(t.names_.size());
    for (const NameCandidate &c : cands) {
      if (c.node >= node_count) {
        throw Error(ErrorCode::kInvalidNameTable,
                    "name '" + name + "' references node " +
                        std::to_string(c.node) + " outside the graph");
      }
      if (!(c.weight > 0.0)) {
        throw Error(ErrorCode::kInvalidNameTable,
                    "name '" + name + "' has a non-positive weight");
      }
      if (t.name_of_[c.node] != kUnset) {
        throw Error(ErrorCode::kInvalidNameTable,
                    "node " + std::to_string(c.node) + " carries two names");
      }
      t.name_of_[c.node] = index;
      total += c.weight;
    }
    if (std::abs(total - 1.0) > 1e-9) {
      throw Error(ErrorCode::kInvalidNameTable,
                  "weights of name '" + name + "' do not sum to 1");
    }
    std::sort(cands.begin(), cands.end(),
              [](const NameCandidate &a, const NameCandidate &b) {
                return a.node < b.node;
              });
    t.names_.push_back(name);
    t.candidates_.push_back(std::move(cands));
  }
  for (size_t i = 0; i < node_count; ++i) {
    if (t.name_of_[i] == kUnset) {
      throw Error(ErrorCode::kInvalidNameTable,
                  "node " + std::to_string(i) + " has no name");
    }
  }
  return t;
}

NameTable NameTable::Unique(size_t node_count) {
  std::map<std::string, std::vector<NameCandidate>> entries;
  for (size_t i = 0; i < node_count; ++i) {
    entries["n" + std::to_string(i)] = {{static_cast<NodeId>(i), 1.0}};
  }
  return Build(node_count, std::move(entries));
}

NameTable NameTable::Nameless(size_t node_count) {
  std::vector<NameCandidate> all(node_count);
  const double w = 1.0 / static_cast<double>(node_count);
  for (size_t i = 0; i < node_count; ++i) {
    all[i] = {static_cast<NodeId>(i), w};
  }
  // Repeated addition of 1/N can drift a few ulps from 1; fold the residue
  // into the last weight.
  double sum = 0.0;
  for (size_t i = 0; i + 1 < node_count; ++i) sum += all[i].weight;
  all.back().weight = 1.0 - sum;
  std::map<std::string, std::vector<NameCandidate>> entries;
  entries["_"] = std::move(all);
  return Build(node_count, std::move(entries));
}

std::span<const NameCandidate> NameTable::Lookup(std::string_view name) const {
  auto index = IndexOf(name);
  if (!index) return {};
  return candidates_[*index];
}

std::optional<size_t> NameTable::IndexOf(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name,
                             [](const std::string &a, std::string_view b) {
                               return std::string_view(a) < b;
                             });
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<size_t>(it - names_.begin());
}

std::vector<NodeId> NameTable::NodesIn(NodeGroup group) const {
  std::vector<NodeId> nodes;
  for (size_t i = 0; i < groups_.size(); ++i) {
    if (groups_[i] == group) nodes.push_back(static_cast<NodeId>(i));
  }
  return nodes;
}

double BinaryEntropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

GraphStats ComputeGraphStats(const Graph &graph) {
  GraphStats stats;
  const double n = static_cast<double>(graph.node_count());
  const double arcs = static_cast<double>(graph.arc_count());
  stats.average_degree = arcs / n;
  if (graph.node_count() < 2) return stats;
  const double pairs = n * (n - 1.0);
  stats.arc_density = arcs / pairs;
  if (graph.labels().size() <= 1) {
    stats.entropy_rate = BinaryEntropy(stats.arc_density);
    return stats;
  }
  // Count label-set symbols over ordered pairs that carry any arc.
  std::map<std::vector<LabelId>, double> symbols;
  double linked_pairs = 0.0;
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    auto out = graph.Out(u);
    for (size_t i = 0; i < out.size();) {
      std::vector<LabelId> set;
      size_t j = i;
      while (j < out.size() && out[j].node == out[i].node) {
        set.push_back(out[j].label);
        ++j;
      }
      symbols[set] += 1.0;
      linked_pairs += 1.0;
      i = j;
    }
  }
  double h = 0.0;
  auto term = [&](double count) {
    if (count <= 0.0) return;
    const double q = count / pairs;
    h -= q * std::log2(q);
  };
  term(pairs - linked_pairs);
  for (const auto &[set, count] : symbols) term(count);
  stats.entropy_rate = h;
  return stats;
}

json GraphToJson(const Graph &graph, const NameTable *names) {
  json doc;
  doc["n"] = graph.node_count();
  doc["labels"] = graph.labels();
  json arcs = json::array();
  for (const Arc &a : graph.Arcs()) {
    arcs.push_back({a.src, a.label, a.dst});
  }
  doc["arcs"] = std::move(arcs);

  json name_obj = json::object();
  json groups = {{"described", json::array()}, {"descriptor", json::array()}};
  if (names != nullptr) {
    for (size_t i = 0; i < names->name_count(); ++i) {
      json cands = json::array();
      for (const NameCandidate &c : names->candidates(i)) {
        cands.push_back({c.node, c.weight});
      }
      name_obj[names->name(i)] = std::move(cands);
    }
    for (NodeId v = 0; v < names->node_count(); ++v) {
      groups[names->GroupOf(v) == NodeGroup::kDescribed ? "described"
                                                        : "descriptor"]
          .push_back(v);
    }
  }
  doc["names"] = std::move(name_obj);
  doc["groups"] = std::move(groups);

  const GraphMetadata &m = graph.metadata();
  json meta;
  meta["kind"] = GraphKindName(m.kind);
  if (m.kind != GraphKind::kManual) {
    meta["p"] = m.arc_probability;
    meta["seed"] = m.seed;
  }
  if (m.kind == GraphKind::kClustered) {
    meta["clusters"] = m.cluster_count;
    meta["inter_cluster_pairs"] = m.inter_cluster_pairs;
  }
  meta["notes"] = m.notes;
  doc["meta"] = std::move(meta);
  return doc;
}

std::string SerializeGraph(const Graph &graph, const NameTable *names) {
  return GraphToJson(graph, names).dump() + "\n";
}

LoadedGraph GraphFromJson(const json &doc) {
  try {
    const size_t n = doc.at("n").get<size_t>();
    auto labels = doc.at("labels").get<std::vector<std::string>>();
    std::vector<Arc> arcs;
    for (const json &a : doc.at("arcs")) {
      if (!a.is_array() || a.size() != 3) {
        throw Error(ErrorCode::kParseError, "arc must be [src,label,dst]");
      }
      const int64_t src = a[0].get<int64_t>();
      const int64_t label = a[1].get<int64_t>();
      const int64_t dst = a[2].get<int64_t>();
      if (src < 0 || dst < 0 || label < 0 ||
          label >= static_cast<int64_t>(kAbsent)) {
        throw Error(ErrorCode::kInvalidArc, "negative or oversized arc field");
      }
      arcs.push_back({static_cast<NodeId>(src), static_cast<LabelId>(label),
                      static_cast<NodeId>(dst)});
    }
    GraphMetadata meta;
    if (doc.contains("meta")) {
      const json &m = doc["meta"];
      meta.kind = ParseGraphKind(m.value("kind", std::string("manual")));
      meta.arc_probability = m.value("p", 0.0);
      meta.seed = m.value("seed", uint64_t{0});
      meta.cluster_count = m.value("clusters", size_t{0});
      meta.inter_cluster_pairs = m.value("inter_cluster_pairs", size_t{0});
      if (m.contains("notes")) {
        meta.notes = m["notes"].get<std::vector<std::string>>();
      }
    }
    LoadedGraph out{Graph::Build(n, std::move(labels), std::move(arcs),
                                 std::move(meta)),
                    std::nullopt};
    if (doc.contains("names") && !doc["names"].empty()) {
      std::map<std::string, std::vector<NameCandidate>> entries;
      for (const auto &[name, cands] : doc["names"].items()) {
        auto &list = entries[name];
        for (const json &c : cands) {
          list.push_back({c.at(0).get<NodeId>(), c.at(1).get<double>()});
        }
      }
      std::vector<NodeGroup> groups;
      if (doc.contains("groups")) {
        groups.assign(n, NodeGroup::kDescribed);
        const json &g = doc["groups"];
        if (g.contains("descriptor")) {
          for (const json &v : g["descriptor"]) {
            const auto id = v.get<size_t>();
            if (id >= n) {
              throw Error(ErrorCode::kParseError, "group id out of range");
            }
            groups[id] = NodeGroup::kDescriptor;
          }
        }
      }
      out.names = NameTable::Build(n, std::move(entries), std::move(groups));
    }
    return out;
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

LoadedGraph LoadGraphFile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  }
  json doc;
  try {
    in >> doc;
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kParseError, path.string() + ": " + e.what());
  }
  return GraphFromJson(doc);
}

}  // namespace refdesc
