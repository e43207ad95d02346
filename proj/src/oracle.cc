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

#include "refdesc/oracle.h"

#include <algorithm>
#include <functional>

#include "fmt/format.h"
#include "refdesc/error.h"

namespace refdesc {
namespace {

std::vector<NodeId> Domain(const std::optional<std::string> &name,
                           const NameTable &names, size_t n) {
  std::vector<NodeId> out;
  if (!name) {
    for (NodeId v = 0; v < n; ++v) out.push_back(v);
    return out;
  }
  for (const NameCandidate &c : names.Lookup(*name)) out.push_back(c.node);
  std::sort(out.begin(), out.end());
  return out;
}

bool AllArcsHold(const Description &desc, const Graph &graph, NodeId y,
                 const std::vector<NodeId> &bind) {
  for (const TargetArc &a : desc.target_arcs) {
    if (!graph.Holds(y, a.label, bind[a.slot])) return false;
  }
  for (const InterArc &a : desc.inter_arcs) {
    if (!graph.Holds(bind[a.from], a.label, bind[a.to])) return false;
  }
  return true;
}

// Calls fn on every k-subset of [0, n) in lexicographic order until it
// returns true.
bool ForEachSubset(size_t n, size_t k,
                   const std::function<bool(const std::vector<size_t> &)> &fn) {
  std::vector<size_t> idx(k);
  std::function<bool(size_t, size_t)> rec = [&](size_t pos, size_t start) {
    if (pos == k) return fn(idx);
    for (size_t i = start; i + (k - pos) <= n; ++i) {
      idx[pos] = i;
      if (rec(pos + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

}  // namespace

ResolutionResult NaiveDecode(const Description &desc, const Graph &graph,
                             const NameTable &names) {
  ValidateDescription(desc);
  ResolutionResult result;
  const size_t n = graph.node_count();
  if (desc.target_name && names.Lookup(*desc.target_name).empty()) {
    result.reason = "unknown target name";
    return result;
  }
  std::vector<std::vector<NodeId>> domains;
  for (const Slot &s : desc.slots) {
    if (s.name && names.Lookup(*s.name).empty()) {
      result.reason = "unknown descriptor name";
      return result;
    }
    domains.push_back(Domain(s.name, names, n));
  }
  const bool injective = desc.shape != ShapeClass::kFlat;
  const size_t d = desc.D();
  std::vector<NodeId> bind(d);
  for (NodeId y : Domain(desc.target_name, names, n)) {
    // Flat semantics resolve each descriptor on its own, so the only
    // coupling is that a descriptor differs from the target.
    std::function<bool(size_t)> rec = [&](size_t pos) -> bool {
      if (pos == d) {
        ++result.work;
        return AllArcsHold(desc, graph, y, bind);
      }
      for (NodeId v : domains[pos]) {
        if (v == y) continue;
        if (injective &&
            std::find(bind.begin(), bind.begin() + pos, v) != bind.begin() + pos) {
          continue;
        }
        bind[pos] = v;
        if (rec(pos + 1)) return true;
      }
      return false;
    };
    if (rec(0)) result.candidates.push_back(y);
  }
  if (result.candidates.size() == 1) {
    result.status = ResolutionStatus::kUnique;
    result.target = result.candidates[0];
  } else if (result.candidates.empty()) {
    result.status = ResolutionStatus::kNone;
  } else {
    result.status = ResolutionStatus::kAmbiguous;
  }
  return result;
}

Description BruteForceShortest(const Graph &graph, const NameTable &names,
                               NodeId target, const CandidateOptions &options) {
  const size_t n = graph.node_count();
  if (n > kOracleMaxNodes) {
    throw Error(ErrorCode::kGraphTooLarge,
                fmt::format("oracle is limited to {} nodes, graph has {}",
                            kOracleMaxNodes, n));
  }
  for (size_t d = 1; d + 1 <= n; ++d) {
    std::vector<NodeId> pool = DescriptorPool(graph, names, target, d, options);
    if (pool.size() < d) break;
    std::optional<Description> found;
    ForEachSubset(pool.size(), d, [&](const std::vector<size_t> &idx) {
      std::vector<NodeId> chosen;
      for (size_t i : idx) chosen.push_back(pool[i]);
      CandidateOptions full = options;
      if (full.shape == ShapeClass::kDeep) full.block_size = d;
      Description desc = BuildDescription(graph, names, target, chosen, full);
      if (desc.shape == ShapeClass::kDeep) {
        // Rebuild the inter arcs without the cap, then try every capped
        // subset of them.
        std::vector<InterArc> all;
        for (uint32_t i = 0; i < d; ++i) {
          for (uint32_t j = 0; j < d; ++j) {
            if (i == j) continue;
            for (const Neighbor &nb : graph.Out(chosen[i])) {
              if (nb.node == chosen[j]) all.push_back({i, nb.label, j});
            }
          }
        }
        std::sort(all.begin(), all.end());
        const size_t cap = d * d / 2;
        if (all.size() > cap) {
          return ForEachSubset(all.size(), cap,
                               [&](const std::vector<size_t> &pick) {
                                 Description variant = desc;
                                 variant.inter_arcs.clear();
                                 for (size_t i : pick) {
                                   variant.inter_arcs.push_back(all[i]);
                                 }
                                 variant.b = static_cast<double>(cap) /
                                             static_cast<double>(d);
                                 if (NaiveDecode(variant, graph, names).status ==
                                     ResolutionStatus::kUnique) {
                                   found = std::move(variant);
                                   return true;
                                 }
                                 return false;
                               });
        }
        desc.inter_arcs = all;
      }
      if (NaiveDecode(desc, graph, names).status == ResolutionStatus::kUnique) {
        found = std::move(desc);
        return true;
      }
      return false;
    });
    if (found) return *found;
  }
  throw Error(ErrorCode::kNoUniqueDescription,
              fmt::format("node {} has no unique description", target));
}

}  // namespace refdesc
