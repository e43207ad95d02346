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

#include "refdesc/generators.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "refdesc/error.h"
#include "refdesc/rng.h"

namespace refdesc {
namespace {

constexpr size_t kDefaultClusters = 10;

std::vector<std::string> MakeLabels(size_t count) {
  if (count == 1) return {"L"};
  std::vector<std::string> labels;
  for (size_t i = 0; i < count; ++i) labels.push_back("L" + std::to_string(i));
  return labels;
}

// Visits a Bernoulli(p) subset of [0, total) in increasing order using
// geometric gaps, so sparse graphs cost O(arcs).
template <typename Fn>
void ForEachSelected(Rng &rng, uint64_t total, double p, Fn fn) {
  uint64_t k = rng.Geometric(p);
  while (k < total) {
    fn(k);
    uint64_t gap = rng.Geometric(p);
    if (gap >= total - k) break;
    k += gap + 1;
  }
}

LabelId DrawLabel(Rng &rng, size_t label_count) {
  return label_count == 1 ? 0 : static_cast<LabelId>(rng.UniformInt(label_count));
}

// ER block over nodes [first, first + size).
void AddErdosRenyiBlock(Rng &rng, NodeId first, size_t size, double p,
                        size_t label_count, std::vector<Arc> &arcs) {
  if (size < 2) return;
  const uint64_t row = size - 1;
  ForEachSelected(rng, static_cast<uint64_t>(size) * row, p, [&](uint64_t k) {
    NodeId u = static_cast<NodeId>(k / row);
    NodeId v = static_cast<NodeId>(k % row);
    if (v >= u) ++v;
    arcs.push_back({first + u, DrawLabel(rng, label_count), first + v});
  });
}

}  // namespace

void ValidateGeneratorConfig(const GeneratorConfig &config) {
  auto fail = [](const std::string &msg) {
    throw Error(ErrorCode::kInvalidConfig, msg);
  };
  if (config.node_count < 1) fail("node_count must be positive");
  if (!(config.arc_probability > 0.0 && config.arc_probability < 1.0)) {
    fail("arc_probability must lie in (0, 1)");
  }
  if (config.label_count < 1 || config.label_count >= kAbsent) {
    fail("label_count out of range");
  }
  if (config.kind == GraphKind::kManual) fail("cannot generate a manual graph");
  if (config.kind == GraphKind::kBipartite && config.node_count % 2 != 0) {
    fail("bipartite graphs need an even node count");
  }
  if (config.kind == GraphKind::kClustered) {
    size_t clusters = config.cluster_count.value_or(kDefaultClusters);
    if (clusters < 1 || config.node_count % clusters != 0) {
      fail("cluster_count must divide node_count");
    }
  }
}

Graph GenerateGraph(const GeneratorConfig &config) {
  ValidateGeneratorConfig(config);
  const size_t n = config.node_count;
  const double p = config.arc_probability;
  GraphMetadata meta;
  meta.kind = config.kind;
  meta.arc_probability = p;
  meta.seed = config.seed;
  std::vector<Arc> arcs;

  switch (config.kind) {
    case GraphKind::kErdosRenyi: {
      Rng rng(DeriveSeed(config.seed, "er"));
      AddErdosRenyiBlock(rng, 0, n, p, config.label_count, arcs);
      break;
    }
    case GraphKind::kBipartite: {
      // Sides [0, n/2) and [n/2, n); both directions sampled independently.
      Rng rng(DeriveSeed(config.seed, "bipartite"));
      const uint64_t h = n / 2;
      ForEachSelected(rng, 2 * h * h, p, [&](uint64_t k) {
        const uint64_t dir = k / (h * h);
        const uint64_t a = (k % (h * h)) / h;
        const uint64_t b = k % h;
        NodeId u = static_cast<NodeId>(dir == 0 ? a : h + a);
        NodeId v = static_cast<NodeId>(dir == 0 ? h + b : b);
        arcs.push_back({u, DrawLabel(rng, config.label_count), v});
      });
      break;
    }
    case GraphKind::kClustered: {
      const size_t clusters = config.cluster_count.value_or(kDefaultClusters);
      const size_t pairs = config.inter_cluster_pairs.value_or(n);
      if (!config.cluster_count) {
        meta.notes.push_back("cluster_count defaulted to " +
                             std::to_string(clusters));
      }
      if (!config.inter_cluster_pairs) {
        meta.notes.push_back("inter_cluster_pairs defaulted to N");
      }
      meta.cluster_count = clusters;
      meta.inter_cluster_pairs = pairs;
      const size_t size = n / clusters;
      for (size_t c = 0; c < clusters; ++c) {
        Rng rng(DeriveSeed(config.seed, "cluster", {c}));
        AddErdosRenyiBlock(rng, static_cast<NodeId>(c * size), size, p,
                           config.label_count, arcs);
      }
      // Cross-cluster ordered pairs: each source has n - size of them.
      const uint64_t row = n - size;
      const uint64_t cross = static_cast<uint64_t>(n) * row;
      if (pairs > cross) {
        throw Error(ErrorCode::kInvalidConfig,
                    "inter_cluster_pairs exceeds the number of cross pairs");
      }
      Rng rng(DeriveSeed(config.seed, "inter"));
      std::vector<uint64_t> picks = rng.SampleDistinct(cross, pairs);
      for (uint64_t k : picks) {
        const uint64_t u = k / row;
        uint64_t v = k % row;
        const uint64_t start = (u / size) * size;
        if (v >= start) v += size;
        if (rng.Bernoulli(p)) {
          arcs.push_back({static_cast<NodeId>(u),
                          DrawLabel(rng, config.label_count),
                          static_cast<NodeId>(v)});
        }
      }
      break;
    }
    case GraphKind::kManual:
      break;
  }
  return Graph::Build(n, MakeLabels(config.label_count), std::move(arcs),
                      std::move(meta));
}

namespace {

// Batches `nodes` (already in their final order) into names "<prefix><i>".
void Batch(const std::vector<NodeId> &nodes, double per_name,
           const std::string &prefix,
           std::map<std::string, std::vector<NameCandidate>> &entries) {
  const size_t n = nodes.size();
  if (n == 0) return;
  if (per_name > static_cast<double>(n) + 1e-9) {
    throw Error(ErrorCode::kInvalidConfig,
                "nodes per name " + std::to_string(per_name) +
                    " exceeds the group size " + std::to_string(n));
  }
  const size_t m = static_cast<size_t>(std::floor(per_name + 1e-12));
  double frac = 0.0;
  if (per_name - static_cast<double>(m) > 1e-12) {
    const double lo = std::log2(static_cast<double>(m));
    const double hi = std::log2(static_cast<double>(m + 1));
    frac = (std::log2(per_name) - lo) / (hi - lo);
  }
  // frac of the nodes sit in groups of m + 1, placed first.
  const size_t big_groups = static_cast<size_t>(
      std::llround(frac * static_cast<double>(n) / static_cast<double>(m + 1)));
  std::vector<size_t> sizes;
  size_t used = 0;
  for (size_t i = 0; i < big_groups && used + m + 1 <= n; ++i) {
    sizes.push_back(m + 1);
    used += m + 1;
  }
  while (used < n) {
    size_t s = std::min(m, n - used);
    sizes.push_back(s);
    used += s;
  }
  size_t pos = 0;
  for (size_t g = 0; g < sizes.size(); ++g) {
    std::vector<NameCandidate> cands;
    const double w = 1.0 / static_cast<double>(sizes[g]);
    for (size_t i = 0; i < sizes[g]; ++i) cands.push_back({nodes[pos++], w});
    double sum = 0.0;
    for (size_t i = 0; i + 1 < cands.size(); ++i) sum += cands[i].weight;
    cands.back().weight = 1.0 - sum;
    entries[prefix + std::to_string(g)] = std::move(cands);
  }
}

}  // namespace

NameTable AssignNames(const Graph &graph, const NamingConfig &config) {
  const size_t n = graph.node_count();
  if (!(config.described_fraction > 0.0 && config.described_fraction <= 1.0)) {
    throw Error(ErrorCode::kInvalidConfig,
                "described_fraction must lie in (0, 1]");
  }
  if (!(config.described_nodes_per_name >= 1.0) ||
      !(config.descriptor_nodes_per_name >= 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "nodes per name must be >= 1");
  }

  std::vector<NodeGroup> groups(n, NodeGroup::kDescriptor);
  auto take = [&](std::vector<NodeId> block) {
    const size_t count = static_cast<size_t>(
        std::llround(config.described_fraction * static_cast<double>(block.size())));
    for (size_t i = 0; i < count && i < block.size(); ++i) {
      groups[block[i]] = NodeGroup::kDescribed;
    }
  };
  auto range = [](size_t first, size_t size) {
    std::vector<NodeId> v(size);
    for (size_t i = 0; i < size; ++i) v[i] = static_cast<NodeId>(first + i);
    return v;
  };
  const GraphMetadata &meta = graph.metadata();
  if (meta.kind == GraphKind::kBipartite) {
    // Id order, so a one-half split is exactly the first side.
    take(range(0, n));
  } else if (meta.kind == GraphKind::kClustered && meta.cluster_count > 0 &&
             n % meta.cluster_count == 0) {
    const size_t size = n / meta.cluster_count;
    for (size_t c = 0; c < meta.cluster_count; ++c) {
      std::vector<NodeId> block = range(c * size, size);
      Rng rng(DeriveSeed(config.seed, "split", {c}));
      rng.Shuffle(block);
      take(std::move(block));
    }
  } else {
    std::vector<NodeId> all = range(0, n);
    Rng rng(DeriveSeed(config.seed, "split"));
    rng.Shuffle(all);
    take(std::move(all));
  }

  std::map<std::string, std::vector<NameCandidate>> entries;
  const NodeGroup kinds[] = {NodeGroup::kDescribed, NodeGroup::kDescriptor};
  for (NodeGroup kind : kinds) {
    std::vector<NodeId> members;
    for (NodeId v = 0; v < n; ++v) {
      if (groups[v] == kind) members.push_back(v);
    }
    const bool described = kind == NodeGroup::kDescribed;
    Rng rng(DeriveSeed(config.seed, "order", {described ? 0u : 1u}));
    rng.Shuffle(members);
    Batch(members,
          described ? config.described_nodes_per_name
                    : config.descriptor_nodes_per_name,
          described ? "x" : "d", entries);
  }
  return NameTable::Build(n, std::move(entries), std::move(groups));
}

Graph FlipArcs(const Graph &graph, double flip_rate, uint64_t seed) {
  if (!(flip_rate >= 0.0 && flip_rate <= 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "flip_rate must lie in [0, 1]");
  }
  const size_t n = graph.node_count();
  GraphMetadata meta;
  meta.seed = seed;
  meta.notes.push_back("arc flips at rate " + std::to_string(flip_rate));
  if (n < 2 || flip_rate == 0.0) {
    return Graph::Build(n, graph.labels(), graph.Arcs(), std::move(meta));
  }
  Rng rng(DeriveSeed(seed, "flip"));
  const uint64_t row = n - 1;
  std::vector<std::pair<NodeId, NodeId>> toggles;
  ForEachSelected(rng, static_cast<uint64_t>(n) * row, flip_rate,
                  [&](uint64_t k) {
                    NodeId u = static_cast<NodeId>(k / row);
                    NodeId v = static_cast<NodeId>(k % row);
                    if (v >= u) ++v;
                    toggles.push_back({u, v});
                  });
  const size_t labels = graph.labels().size();
  std::vector<Arc> out;
  size_t t = 0;
  for (NodeId u = 0; u < n; ++u) {
    // Toggles are generated in (u, v) order.
    const size_t first = t;
    while (t < toggles.size() && toggles[t].first == u) ++t;
    auto toggled = [&](NodeId v) {
      return std::binary_search(toggles.begin() + first, toggles.begin() + t,
                                std::make_pair(u, v));
    };
    for (const Neighbor &nb : graph.Out(u)) {
      if (!toggled(nb.node)) out.push_back({u, nb.label, nb.node});
    }
    for (size_t i = first; i < t; ++i) {
      if (!graph.HasAnyArc(u, toggles[i].second)) {
        out.push_back({u, DrawLabel(rng, labels), toggles[i].second});
      }
    }
  }
  return Graph::Build(n, graph.labels(), std::move(out), std::move(meta));
}

}  // namespace refdesc
