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

#include "gtest/gtest.h"
#include "refdesc/decode.h"
#include "refdesc/generators.h"
#include "refdesc/search.h"
#include "test_util.h"

namespace refdesc {
namespace {

TEST(OracleTest, PathMiddleNeedsOneDescriptor) {
  Graph g = FromPairs(3, {{0, 1}, {1, 2}});
  Description d = BruteForceShortest(g, NameTable::Unique(3), 1, {});
  EXPECT_EQ(d.D(), 1u);
  EXPECT_EQ(d.truth->descriptors, std::vector<NodeId>{2});
}

TEST(OracleTest, DirectedCycleIsAutomorphic) {
  Graph g = FromPairs(3, {{0, 1}, {1, 2}, {2, 0}});
  CandidateOptions o;
  o.shape = ShapeClass::kDeep;
  o.nameless_target = true;
  o.variable_slots = true;
  EXPECT_EQ(CodeOf([&] { BruteForceShortest(g, NameTable::Nameless(3), 0, o); }),
            ErrorCode::kNoUniqueDescription);
}

TEST(OracleTest, GraphTooLarge) {
  Graph g = ErdosRenyi(kOracleMaxNodes + 1, 0.2, 1);
  EXPECT_EQ(CodeOf([&] {
              BruteForceShortest(g, NameTable::Unique(g.node_count()), 0, {});
            }),
            ErrorCode::kGraphTooLarge);
}

TEST(OracleTest, NaiveDecodeOnTwins) {
  std::map<std::string, std::vector<NameCandidate>> e;
  e["x"] = {{0, 0.5}, {1, 0.5}};
  e["d"] = {{2, 1.0}};
  NameTable names = NameTable::Build(3, e);
  Graph g = FromPairs(3, {{0, 2}, {1, 2}});
  Description d;
  d.target_name = "x";
  d.slots = {{"d"}};
  d.target_arcs = {{0, 0}};
  ResolutionResult r = NaiveDecode(d, g, names);
  EXPECT_EQ(r.status, ResolutionStatus::kAmbiguous);
  EXPECT_EQ(r.candidates, (std::vector<NodeId>{0, 1}));
}

// Search never beats the exhaustive minimum and nearly always meets it.
TEST(OracleTest, SearchTracksOracle) {
  size_t nodes = 0, within_one = 0;
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = ErdosRenyi(20, 0.3, seed);
    NamingConfig nc;
    nc.described_nodes_per_name = 4;
    nc.descriptor_nodes_per_name = 2;
    nc.seed = seed;
    NameTable names = AssignNames(g, nc);
    for (NodeId t : names.NodesIn(NodeGroup::kDescribed)) {
      size_t best = 0;
      try {
        best = BruteForceShortest(g, names, t, {}).D();
      } catch (const Error &e) {
        ASSERT_EQ(e.code(), ErrorCode::kNoUniqueDescription);
        SearchOptions o;
        o.seed = seed;
        EXPECT_EQ(CodeOf([&] { FindShortestUnique(g, names, t, o); }),
                  ErrorCode::kNoUniqueDescription);
        continue;
      }
      SearchOptions o;
      o.seed = seed;
      const size_t found = FindShortestUnique(g, names, t, o).D();
      ASSERT_GE(found, best) << "seed " << seed << " target " << t;
      ++nodes;
      within_one += found <= best + 1;
    }
  }
  ASSERT_GT(nodes, 100u);
  EXPECT_GE(within_one, 0.95 * nodes);
}

}  // namespace
}  // namespace refdesc
