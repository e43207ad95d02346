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

#include "refdesc/search.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "fmt/format.h"
#include "refdesc/error.h"
#include "refdesc/rng.h"

namespace refdesc {

std::string_view StrategyName(Strategy strategy) {
  return strategy == Strategy::kRandom ? "random" : "salient";
}

Strategy ParseStrategy(std::string_view name) {
  if (name == "random") return Strategy::kRandom;
  if (name == "salient") return Strategy::kSalient;
  throw Error(ErrorCode::kParseError,
              "unknown strategy '" + std::string(name) + "'");
}

namespace {

std::vector<bool> EligibleMask(const NameTable &names, NodeId target) {
  const size_t n = names.node_count();
  std::vector<bool> eligible(n, false);
  bool any = false;
  for (NodeId v = 0; v < n; ++v) {
    if (v != target && names.GroupOf(v) == NodeGroup::kDescriptor) {
      eligible[v] = true;
      any = true;
    }
  }
  if (!any) {
    for (NodeId v = 0; v < n; ++v) eligible[v] = v != target;
  }
  return eligible;
}

}  // namespace

std::vector<NodeId> DescriptorPool(const Graph &graph, const NameTable &names,
                                   NodeId target, size_t size,
                                   const CandidateOptions &options) {
  if (target >= graph.node_count()) {
    throw Error(ErrorCode::kInvalidInput,
                fmt::format("target {} outside the graph", target));
  }
  if (names.node_count() != graph.node_count()) {
    throw Error(ErrorCode::kNodeSetMismatch,
                "name table and graph cover different node sets");
  }
  std::vector<bool> eligible = EligibleMask(names, target);
  std::vector<NodeId> pool;
  if (options.strategy == Strategy::kRandom) {
    for (NodeId v = 0; v < graph.node_count(); ++v) {
      if (eligible[v]) pool.push_back(v);
    }
    return pool;
  }
  for (const Neighbor &nb : graph.Out(target)) {
    if (eligible[nb.node] && (pool.empty() || pool.back() != nb.node)) {
      pool.push_back(nb.node);
    }
  }
  if (options.shape != ShapeClass::kFlat && pool.size() < size) {
    std::vector<bool> taken(graph.node_count(), false);
    for (NodeId v : pool) taken[v] = true;
    std::vector<NodeId> extra;
    auto consider = [&](NodeId v) {
      if (eligible[v] && !taken[v]) {
        taken[v] = true;
        extra.push_back(v);
      }
    };
    for (NodeId v : pool) {
      for (const Neighbor &nb : graph.Out(v)) consider(nb.node);
      for (const Neighbor &nb : graph.In(v)) consider(nb.node);
    }
    pool.insert(pool.end(), extra.begin(), extra.end());
    std::sort(pool.begin(), pool.end());
  }
  return pool;
}

Description BuildDescription(const Graph &graph, const NameTable &names,
                             NodeId target, std::vector<NodeId> descriptors,
                             const CandidateOptions &options) {
  std::sort(descriptors.begin(), descriptors.end());
  Description desc;
  desc.shape = options.shape;
  if (!options.nameless_target) desc.target_name = names.NameOf(target);
  const size_t d = descriptors.size();
  for (NodeId v : descriptors) {
    if (v == target || v >= graph.node_count()) {
      throw Error(ErrorCode::kInvalidInput, "bad descriptor node");
    }
    desc.slots.push_back(options.variable_slots ? Slot{std::nullopt}
                                                : Slot{names.NameOf(v)});
  }
  for (uint32_t s = 0; s < d; ++s) {
    bool present = false;
    for (const Neighbor &nb : graph.Out(target)) {
      if (nb.node == descriptors[s]) {
        desc.target_arcs.push_back({nb.label, s});
        present = true;
      }
    }
    if (!present && options.strategy == Strategy::kRandom) {
      desc.target_arcs.push_back({kAbsent, s});
    }
  }
  if (options.shape != ShapeClass::kFlat && d > 1) {
    const size_t cap = d * d / 2;
    const size_t block = std::max<size_t>(options.block_size, 2);
    for (uint32_t i = 0; i < d && desc.inter_arcs.size() < cap; ++i) {
      for (const Neighbor &nb : graph.Out(descriptors[i])) {
        auto it = std::lower_bound(descriptors.begin(), descriptors.end(),
                                   nb.node);
        if (it == descriptors.end() || *it != nb.node) continue;
        const uint32_t j = static_cast<uint32_t>(it - descriptors.begin());
        if (options.shape == ShapeClass::kIntermediate &&
            i / block != j / block) {
          continue;
        }
        if (desc.inter_arcs.size() >= cap) break;
        desc.inter_arcs.push_back({i, nb.label, j});
      }
    }
    std::sort(desc.inter_arcs.begin(), desc.inter_arcs.end());
  }
  desc.b = d == 0 ? 0.0
                  : static_cast<double>(desc.inter_arcs.size()) /
                        static_cast<double>(d);
  desc.truth = GroundTruth{target, std::move(descriptors)};
  return desc;
}

Description SampleCandidateDescription(const Graph &graph,
                                       const NameTable &names, NodeId target,
                                       size_t size,
                                       const CandidateOptions &options,
                                       uint64_t seed) {
  if (size < 1) throw Error(ErrorCode::kInvalidInput, "D must be >= 1");
  std::vector<NodeId> pool = DescriptorPool(graph, names, target, size, options);
  if (options.strategy == Strategy::kSalient && pool.empty()) {
    throw Error(ErrorCode::kNoNeighbors,
                fmt::format("node {} has no eligible out-neighbours", target));
  }
  if (pool.size() < size) {
    throw Error(ErrorCode::kNotEnoughNodes,
                fmt::format("need {} descriptors, {} available", size,
                            pool.size()));
  }
  Rng rng(DeriveSeed(seed, "sample"));
  std::vector<NodeId> chosen;
  for (uint64_t i : rng.SampleDistinct(pool.size(), size)) {
    chosen.push_back(pool[i]);
  }
  return BuildDescription(graph, names, target, std::move(chosen), options);
}

size_t DefaultEnsembleSize(size_t node_count) {
  if (node_count < 2) return 1;
  return static_cast<size_t>(
      std::ceil(3.0 * std::log2(static_cast<double>(node_count)) - 1e-9));
}

namespace {

// C(n, k), saturating just above `limit`.
uint64_t Choose(uint64_t n, uint64_t k, uint64_t limit) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double c = 1.0L;
  for (uint64_t i = 1; i <= k; ++i) {
    c = c * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (c > static_cast<long double>(limit)) return limit + 1;
  }
  return static_cast<uint64_t>(std::llround(static_cast<double>(c)));
}

// Index subsets of [0, n) of size k to try, ascending.
std::vector<std::vector<uint32_t>> CandidateSubsets(size_t n, size_t k,
                                                    size_t budget, Rng &rng) {
  std::vector<std::vector<uint32_t>> out;
  if (Choose(n, k, budget) <= budget) {
    std::vector<uint32_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = static_cast<uint32_t>(i);
    while (true) {
      out.push_back(idx);
      size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
  }
  std::set<std::vector<uint32_t>> seen;
  for (size_t attempt = 0; seen.size() < budget && attempt < 20 * budget;
       ++attempt) {
    std::vector<uint32_t> idx;
    for (uint64_t v : rng.SampleDistinct(n, k)) {
      idx.push_back(static_cast<uint32_t>(v));
    }
    std::sort(idx.begin(), idx.end());
    seen.insert(std::move(idx));
  }
  out.assign(seen.begin(), seen.end());
  return out;
}

}  // namespace

Description FindShortestUnique(const Graph &graph, const NameTable &names,
                               NodeId target, const SearchOptions &options) {
  const size_t n = graph.node_count();
  const size_t budget = options.ensemble_size > 0 ? options.ensemble_size
                                                  : DefaultEnsembleSize(n);
  const size_t max_d = std::min(options.max_d, n > 0 ? n - 1 : 0);
  DecodeOptions decode = options.decode;
  decode.candidate_cap = 2;
  for (size_t d = 1; d <= max_d; ++d) {
    std::vector<NodeId> pool =
        DescriptorPool(graph, names, target, d, options.candidate);
    if (pool.size() < d) break;
    Rng rng(DeriveSeed(options.seed, "candidates", {d}));
    for (const auto &subset : CandidateSubsets(pool.size(), d, budget, rng)) {
      std::vector<NodeId> chosen;
      for (uint32_t i : subset) chosen.push_back(pool[i]);
      Description desc = BuildDescription(graph, names, target,
                                          std::move(chosen), options.candidate);
      ResolutionResult r = Decode(desc, graph, names, decode);
      if (r.status == ResolutionStatus::kUnique && r.target == target) {
        return desc;
      }
    }
  }
  throw Error(ErrorCode::kNoUniqueDescription,
              fmt::format("no unique description of node {} with D <= {}",
                          target, max_d));
}

std::vector<Description> ConstructLandmark(
    const Graph &graph, const NameTable &names,
    const std::vector<NodeId> &targets, size_t size,
    const std::optional<std::vector<NodeId>> &landmarks, uint64_t seed,
    bool nameless_targets) {
  if (size < 1) throw Error(ErrorCode::kInvalidInput, "D must be >= 1");
  const size_t n = graph.node_count();
  std::vector<NodeId> chosen;
  if (landmarks) {
    chosen = *landmarks;
  } else {
    std::vector<bool> is_target(n, false);
    for (NodeId t : targets) {
      if (t >= n) throw Error(ErrorCode::kInvalidInput, "target outside graph");
      is_target[t] = true;
    }
    std::vector<NodeId> pool;
    for (NodeId v = 0; v < n; ++v) {
      if (!is_target[v] && names.candidates(names.NameIndexOf(v)).size() == 1) {
        pool.push_back(v);
      }
    }
    if (pool.size() < size) {
      pool.clear();
      for (NodeId v = 0; v < n; ++v) {
        if (!is_target[v]) pool.push_back(v);
      }
    }
    if (pool.size() < size) {
      throw Error(ErrorCode::kNotEnoughNodes,
                  fmt::format("need {} landmarks, {} available", size,
                              pool.size()));
    }
    Rng rng(DeriveSeed(seed, "landmarks"));
    for (uint64_t i : rng.SampleDistinct(pool.size(), size)) {
      chosen.push_back(pool[i]);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  CandidateOptions options;
  options.strategy = Strategy::kRandom;
  options.nameless_target = nameless_targets;
  std::vector<Description> out;
  out.reserve(targets.size());
  for (NodeId t : targets) {
    std::vector<NodeId> mine;
    for (NodeId v : chosen) {
      if (v != t) mine.push_back(v);
    }
    out.push_back(BuildDescription(graph, names, t, std::move(mine), options));
  }
  return out;
}

Description ConstructStructural(const Graph &graph, NodeId target,
                                size_t ensemble_size, size_t max_d,
                                uint64_t seed, const DecodeOptions &decode) {
  NameTable nameless = NameTable::Nameless(graph.node_count());
  SearchOptions options;
  options.candidate.shape = ShapeClass::kDeep;
  options.candidate.strategy = Strategy::kSalient;
  options.candidate.nameless_target = true;
  options.candidate.variable_slots = true;
  options.ensemble_size = ensemble_size;
  options.max_d = max_d;
  options.seed = seed;
  options.decode = decode;
  return FindShortestUnique(graph, nameless, target, options);
}

}  // namespace refdesc
