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

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "refdesc/generators.h"
#include "refdesc/oracle.h"
#include "refdesc/rng.h"
#include "refdesc/search.h"
#include "test_util.h"

namespace refdesc {
namespace {

using ::testing::ElementsAre;

// "x" names nodes 0 and 1, "d" names node 2, the rest are unique.
NameTable TwinTable(size_t n) {
  std::map<std::string, std::vector<NameCandidate>> e;
  e["x"] = {{0, 0.5}, {1, 0.5}};
  e["d"] = {{2, 1.0}};
  for (NodeId v = 3; v < n; ++v) e["n" + std::to_string(v)] = {{v, 1.0}};
  return NameTable::Build(n, e);
}

Description OneArc(const std::string &target, const std::string &slot,
                   LabelId label) {
  Description d;
  d.target_name = target;
  d.slots = {{slot}};
  d.target_arcs = {{label, 0}};
  return d;
}

TEST(DecodeTest, SingleArcUnique) {
  Graph g = FromPairs(2, {{0, 1}});
  ResolutionResult r = Decode(OneArc("n0", "n1", 0), g, NameTable::Unique(2));
  EXPECT_EQ(r.status, ResolutionStatus::kUnique);
  EXPECT_EQ(r.target, 0u);
  EXPECT_THAT(r.bindings, ElementsAre(1u));
}

TEST(DecodeTest, SymmetricTwinsAreAmbiguous) {
  Graph g = FromPairs(3, {{0, 2}, {1, 2}});
  ResolutionResult r = Decode(OneArc("x", "d", 0), g, TwinTable(3));
  EXPECT_EQ(r.status, ResolutionStatus::kAmbiguous);
  EXPECT_THAT(r.candidates, ElementsAre(0u, 1u));
  EXPECT_FALSE(r.target.has_value());
}

TEST(DecodeTest, CandidateCapTruncates) {
  Graph g = FromPairs(3, {{0, 2}, {1, 2}});
  DecodeOptions o;
  o.candidate_cap = 1;
  ResolutionResult r = Decode(OneArc("x", "d", 0), g, TwinTable(3), o);
  EXPECT_EQ(r.status, ResolutionStatus::kAmbiguous);
  EXPECT_TRUE(r.truncated);
  EXPECT_EQ(r.candidates.size(), 1u);
}

TEST(DecodeTest, AbsenceDistinguishesTwins) {
  Graph g = FromPairs(3, {{0, 2}});
  ResolutionResult r = Decode(OneArc("x", "d", kAbsent), g, TwinTable(3));
  EXPECT_EQ(r.status, ResolutionStatus::kUnique);
  EXPECT_EQ(r.target, 1u);
}

TEST(DecodeTest, UnknownNamesResolveToNone) {
  Graph g = FromPairs(3, {{0, 2}});
  ResolutionResult r = Decode(OneArc("zz", "d", 0), g, TwinTable(3));
  EXPECT_EQ(r.status, ResolutionStatus::kNone);
  EXPECT_THAT(r.reason, ::testing::HasSubstr("zz"));
  r = Decode(OneArc("x", "yy", 0), g, TwinTable(3));
  EXPECT_EQ(r.status, ResolutionStatus::kNone);
  EXPECT_THAT(r.reason, ::testing::HasSubstr("yy"));
}

TEST(DecodeTest, NoMatch) {
  Graph g = FromPairs(3, {});
  ResolutionResult r = Decode(OneArc("x", "d", 0), g, TwinTable(3));
  EXPECT_EQ(r.status, ResolutionStatus::kNone);
  EXPECT_TRUE(r.candidates.empty());
}

TEST(DecodeTest, NodeSetMismatch) {
  Graph g = FromPairs(3, {});
  EXPECT_EQ(CodeOf([&] {
              Decode(OneArc("n0", "n1", 0), g, NameTable::Unique(4));
            }),
            ErrorCode::kNodeSetMismatch);
}

TEST(DecodeTest, DeepChainWithVariables) {
  // Target 0 -> 1 -> 2 and a decoy 3 -> 4 without a continuation.
  Graph g = FromPairs(5, {{0, 1}, {1, 2}, {3, 4}});
  Description d;
  d.slots = {{std::nullopt}, {std::nullopt}};
  d.target_arcs = {{0, 0}};
  d.inter_arcs = {{0, 0, 1}};
  d.shape = ShapeClass::kDeep;
  ResolutionResult r = Decode(d, g, NameTable::Nameless(5));
  EXPECT_EQ(r.status, ResolutionStatus::kUnique);
  EXPECT_EQ(r.target, 0u);
  EXPECT_THAT(r.bindings, ElementsAre(1u, 2u));
}

TEST(DecodeTest, DeepBindingsAreInjective) {
  // The only way to satisfy two slots from 0 would reuse node 1.
  Graph g = FromPairs(2, {{0, 1}});
  Description d;
  d.slots = {{std::nullopt}, {std::nullopt}};
  d.target_arcs = {{0, 0}, {0, 1}};
  d.shape = ShapeClass::kDeep;
  EXPECT_EQ(Decode(d, g, NameTable::Nameless(2)).status,
            ResolutionStatus::kNone);
}

TEST(DecodeTest, BudgetExceeded) {
  Graph g = ErdosRenyi(200, 0.2, 1);
  Description d;
  d.slots.assign(4, {std::nullopt});
  d.target_arcs = {{0, 0}, {0, 1}, {0, 2}, {0, 3}};
  d.shape = ShapeClass::kDeep;
  DecodeOptions o;
  o.budget = 50;
  EXPECT_EQ(CodeOf([&] { Decode(d, g, NameTable::Nameless(200), o); }),
            ErrorCode::kBudgetExceeded);
}

// Random small descriptions, checked against exhaustive enumeration.
TEST(DecodeTest, AgreesWithNaiveDecode) {
  Rng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const size_t n = 6 + rng.UniformInt(8);
    GeneratorConfig c;
    c.node_count = n;
    c.arc_probability = 0.15 + 0.4 * rng.Uniform();
    c.label_count = 1 + rng.UniformInt(2);
    c.seed = rng.Next();
    Graph g = GenerateGraph(c);
    NamingConfig nc;
    nc.described_nodes_per_name = 1 + rng.UniformInt(3);
    nc.descriptor_nodes_per_name = 1 + rng.UniformInt(2);
    nc.seed = rng.Next();
    NameTable names = AssignNames(g, nc);

    Description d;
    const bool deep = rng.Bernoulli(0.5);
    d.shape = deep ? ShapeClass::kDeep : ShapeClass::kFlat;
    const NodeId target = static_cast<NodeId>(rng.UniformInt(n));
    if (rng.Bernoulli(0.8)) d.target_name = names.NameOf(target);
    const size_t slots = 1 + rng.UniformInt(3);
    for (size_t s = 0; s < slots; ++s) {
      NodeId v = static_cast<NodeId>(rng.UniformInt(n));
      d.slots.push_back(rng.Bernoulli(0.3) ? Slot{std::nullopt}
                                           : Slot{names.NameOf(v)});
      LabelId label = rng.Bernoulli(0.3)
                          ? kAbsent
                          : static_cast<LabelId>(rng.UniformInt(c.label_count));
      d.target_arcs.push_back({label, static_cast<uint32_t>(s)});
    }
    if (deep && slots > 1) {
      for (uint32_t i = 0; i < slots; ++i) {
        for (uint32_t j = 0; j < slots; ++j) {
          if (i != j && rng.Bernoulli(0.3)) d.inter_arcs.push_back({i, 0, j});
        }
      }
    }
    ResolutionResult fast = Decode(d, g, names);
    ResolutionResult slow = NaiveDecode(d, g, names);
    ASSERT_EQ(fast.status, slow.status) << "trial " << trial;
    ASSERT_EQ(fast.candidates, slow.candidates) << "trial " << trial;
    if (fast.status == ResolutionStatus::kUnique) {
      // The returned binding must satisfy the description.
      Description bound = d;
      bound.truth = GroundTruth{*fast.target, fast.bindings};
      EXPECT_TRUE(TruthHolds(bound, g));
    }
  }
}

TEST(DecodeTest, FlatWorkBound) {
  Graph g = ErdosRenyi(1000, 0.02, 3);
  NamingConfig nc;
  nc.described_nodes_per_name = 20;
  nc.descriptor_nodes_per_name = 4;
  nc.seed = 1;
  NameTable names = AssignNames(g, nc);
  CandidateOptions o;
  o.strategy = Strategy::kRandom;
  for (NodeId t : names.NodesIn(NodeGroup::kDescribed)) {
    if (t % 25 != 0) continue;
    Description d = SampleCandidateDescription(g, names, t, 5, o, t);
    size_t max_slot = 0;
    for (const Slot &s : d.slots) {
      max_slot = std::max(max_slot, names.Lookup(*s.name).size());
    }
    ResolutionResult r = Decode(d, g, names);
    EXPECT_LE(r.work, names.Lookup(*d.target_name).size() * d.D() * max_slot);
    EXPECT_THAT(r.candidates, ::testing::Contains(t));
  }
}

}  // namespace
}  // namespace refdesc
