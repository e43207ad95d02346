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

#include "refdesc/decode.h"

#include <algorithm>
#include <limits>

#include "refdesc/error.h"

namespace refdesc {

std::string_view ResolutionStatusName(ResolutionStatus status) {
  switch (status) {
    case ResolutionStatus::kUnique: return "UNIQUE";
    case ResolutionStatus::kAmbiguous: return "AMBIGUOUS";
    case ResolutionStatus::kNone: return "NONE";
  }
  return "NONE";
}

namespace {

constexpr uint32_t kAnyName = std::numeric_limits<uint32_t>::max();

// A constraint between the variable being bound and an earlier one.
// `outgoing` means the arc runs from the variable to `other`.
struct Check {
  uint32_t other;
  LabelId label;
  bool outgoing;
};

class Resolver {
 public:
  Resolver(const Description &desc, const Graph &graph, const NameTable &names,
           const DecodeOptions &options)
      : desc_(desc), graph_(graph), names_(names), options_(options) {}

  ResolutionResult Run() {
    ValidateDescription(desc_);
    ResolutionResult result;
    // Variable 0 is the target; slot i is variable i + 1.
    const size_t vars = desc_.D() + 1;
    name_of_.assign(vars, kAnyName);
    if (desc_.target_name) {
      auto index = names_.IndexOf(*desc_.target_name);
      if (!index) {
        result.reason = "unknown target name '" + *desc_.target_name + "'";
        return result;
      }
      name_of_[0] = static_cast<uint32_t>(*index);
    }
    for (size_t s = 0; s < desc_.D(); ++s) {
      if (desc_.slots[s].variable()) continue;
      auto index = names_.IndexOf(*desc_.slots[s].name);
      if (!index) {
        result.reason = "unknown descriptor name '" + *desc_.slots[s].name + "'";
        return result;
      }
      name_of_[s + 1] = static_cast<uint32_t>(*index);
    }
    binding_.assign(vars, 0);

    std::vector<NodeId> targets;
    if (name_of_[0] == kAnyName) {
      targets.resize(graph_.node_count());
      for (size_t i = 0; i < targets.size(); ++i) {
        targets[i] = static_cast<NodeId>(i);
      }
    } else {
      for (const NameCandidate &c : names_.candidates(name_of_[0])) {
        targets.push_back(c.node);
      }
    }
    std::sort(targets.begin(), targets.end());

    const bool flat = desc_.shape == ShapeClass::kFlat;
    if (flat) {
      PrepareFlat();
    } else {
      PrepareDeep();
    }
    std::vector<NodeId> first_binding;
    for (NodeId y : targets) {
      if (!flat) Spend();
      if (y >= graph_.node_count()) continue;
      binding_[0] = y;
      bool ok = flat ? FlatSatisfied(y) : Bind(1);
      if (!ok) continue;
      if (result.candidates.empty()) {
        first_binding.assign(binding_.begin() + 1, binding_.end());
      }
      result.candidates.push_back(y);
      if (options_.candidate_cap > 0 &&
          result.candidates.size() >= options_.candidate_cap) {
        result.truncated = true;
        break;
      }
    }
    result.work = work_;
    if (result.candidates.size() == 1 && !result.truncated) {
      result.status = ResolutionStatus::kUnique;
      result.target = result.candidates[0];
      result.bindings = std::move(first_binding);
    } else if (result.candidates.empty()) {
      result.status = ResolutionStatus::kNone;
      result.reason = "no node satisfies the description";
    } else {
      result.status = ResolutionStatus::kAmbiguous;
    }
    return result;
  }

 private:
  void Spend() {
    if (++work_ > options_.budget) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "decode exceeded " + std::to_string(options_.budget) +
                      " node expansions");
    }
  }

  bool HasName(uint32_t var, NodeId node) const {
    return name_of_[var] == kAnyName || names_.NameIndexOf(node) == name_of_[var];
  }

  size_t DomainSize(uint32_t var) const {
    return name_of_[var] == kAnyName ? graph_.node_count()
                                     : names_.candidates(name_of_[var]).size();
  }

  // Flat: for each slot the labels required from the target.
  void PrepareFlat() {
    slot_labels_.assign(desc_.D(), {});
    for (const TargetArc &a : desc_.target_arcs) {
      slot_labels_[a.slot].push_back(a.label);
    }
  }

  bool SlotMatches(NodeId y, uint32_t slot, NodeId d) const {
    if (d == y || !HasName(slot + 1, d)) return false;
    for (LabelId l : slot_labels_[slot]) {
      if (!graph_.Holds(y, l, d)) return false;
    }
    return true;
  }

  bool FlatSatisfied(NodeId y) {
    for (uint32_t s = 0; s < desc_.D(); ++s) {
      const auto &labels = slot_labels_[s];
      // A present label lets us scan the target's out-list instead.
      std::optional<LabelId> present;
      for (LabelId l : labels) {
        if (l != kAbsent) present = l;
      }
      bool found = false;
      auto out = graph_.Out(y);
      if (present && out.size() < DomainSize(s + 1)) {
        for (const Neighbor &n : out) {
          if (n.label != *present) continue;
          Spend();
          if (SlotMatches(y, s, n.node)) {
            binding_[s + 1] = n.node;
            found = true;
            break;
          }
        }
      } else if (name_of_[s + 1] != kAnyName) {
        for (const NameCandidate &c : names_.candidates(name_of_[s + 1])) {
          Spend();
          if (SlotMatches(y, s, c.node)) {
            binding_[s + 1] = c.node;
            found = true;
            break;
          }
        }
      } else {
        for (NodeId d = 0; d < graph_.node_count(); ++d) {
          Spend();
          if (SlotMatches(y, s, d)) {
            binding_[s + 1] = d;
            found = true;
            break;
          }
        }
      }
      if (!found) return false;
    }
    return true;
  }

  // Deep: fixes a binding order and the checks each step must pass.
  void PrepareDeep() {
    const size_t vars = desc_.D() + 1;
    struct Edge {
      uint32_t from, to;
      LabelId label;
    };
    std::vector<Edge> edges;
    for (const TargetArc &a : desc_.target_arcs) {
      edges.push_back({0, a.slot + 1, a.label});
    }
    for (const InterArc &a : desc_.inter_arcs) {
      edges.push_back({a.from + 1, a.to + 1, a.label});
    }
    std::vector<size_t> degree(vars, 0);
    for (const Edge &e : edges) {
      ++degree[e.from];
      ++degree[e.to];
    }
    std::vector<bool> placed(vars, false);
    order_ = {0};
    placed[0] = true;
    while (order_.size() < vars) {
      uint32_t best = 0;
      size_t best_links = 0;
      bool have = false;
      for (uint32_t v = 1; v < vars; ++v) {
        if (placed[v]) continue;
        size_t links = 0;
        for (const Edge &e : edges) {
          if ((e.from == v && placed[e.to]) || (e.to == v && placed[e.from])) {
            ++links;
          }
        }
        bool better = !have || links > best_links ||
                      (links == best_links && degree[v] > degree[best]) ||
                      (links == best_links && degree[v] == degree[best] &&
                       DomainSize(v) < DomainSize(best));
        if (better) {
          best = v;
          best_links = links;
          have = true;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
    std::vector<size_t> position(vars);
    for (size_t i = 0; i < vars; ++i) position[order_[i]] = i;
    checks_.assign(vars, {});
    for (const Edge &e : edges) {
      if (position[e.from] > position[e.to]) {
        checks_[position[e.from]].push_back({e.to, e.label, true});
      } else {
        checks_[position[e.to]].push_back({e.from, e.label, false});
      }
    }
  }

  bool Accept(size_t pos, NodeId node) {
    Spend();
    const uint32_t var = order_[pos];
    if (!HasName(var, node)) return false;
    for (size_t i = 0; i < pos; ++i) {
      if (binding_[order_[i]] == node) return false;
    }
    for (const Check &c : checks_[pos]) {
      NodeId other = binding_[c.other];
      bool holds = c.outgoing ? graph_.Holds(node, c.label, other)
                              : graph_.Holds(other, c.label, node);
      if (!holds) return false;
    }
    return true;
  }

  // Binds order_[pos..]; true once a complete binding exists.
  bool Bind(size_t pos) {
    if (pos == order_.size()) return true;
    const uint32_t var = order_[pos];
    // Smallest generator among the name set and present-arc adjacency lists.
    size_t best_size = DomainSize(var);
    const Check *best = nullptr;
    for (const Check &c : checks_[pos]) {
      if (c.label == kAbsent) continue;
      NodeId other = binding_[c.other];
      size_t size = c.outgoing ? graph_.In(other).size()
                               : graph_.Out(other).size();
      if (size < best_size) {
        best_size = size;
        best = &c;
      }
    }
    auto attempt = [&](NodeId node) {
      if (!Accept(pos, node)) return false;
      binding_[var] = node;
      return Bind(pos + 1);
    };
    if (best != nullptr) {
      NodeId other = binding_[best->other];
      auto list = best->outgoing ? graph_.In(other) : graph_.Out(other);
      for (const Neighbor &n : list) {
        if (n.label == best->label && attempt(n.node)) return true;
      }
      return false;
    }
    if (name_of_[var] != kAnyName) {
      for (const NameCandidate &c : names_.candidates(name_of_[var])) {
        if (attempt(c.node)) return true;
      }
      return false;
    }
    for (NodeId node = 0; node < graph_.node_count(); ++node) {
      if (attempt(node)) return true;
    }
    return false;
  }

  const Description &desc_;
  const Graph &graph_;
  const NameTable &names_;
  const DecodeOptions &options_;
  uint64_t work_ = 0;
  std::vector<uint32_t> name_of_;
  std::vector<NodeId> binding_;
  std::vector<std::vector<LabelId>> slot_labels_;
  std::vector<uint32_t> order_;
  std::vector<std::vector<Check>> checks_;
};

}  // namespace

ResolutionResult Decode(const Description &desc, const Graph &graph,
                        const NameTable &names, const DecodeOptions &options) {
  if (names.node_count() != graph.node_count()) {
    throw Error(ErrorCode::kNodeSetMismatch,
                "name table and graph cover different node sets");
  }
  return Resolver(desc, graph, names, options).Run();
}

}  // namespace refdesc
