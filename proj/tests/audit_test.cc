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

#include "refdesc/audit.h"

#include "gtest/gtest.h"
#include "refdesc/generators.h"
#include "refdesc/search.h"
#include "test_util.h"

namespace refdesc {
namespace {

TEST(AuditTest, EmptyDescriptionsMatchEveryone) {
  Graph g = ErdosRenyi(100, 0.1, 1);
  NameTable names = NameTable::Unique(100);
  std::vector<Description> ds(3);
  for (size_t k : {1, 10, 100}) {
    AuditReport r = KAnonymityAudit(ds, g, names, k);
    EXPECT_EQ(r.flagged_count, 0u);
    for (const AuditEntry &e : r.entries) EXPECT_EQ(e.matches, 100u);
    EXPECT_FALSE(r.batch_flagged);
  }
  EXPECT_EQ(KAnonymityAudit({}, g, names, 5).entries.size(), 0u);
}

TEST(AuditTest, UniqueDescriptionsAreFlagged) {
  Graph g = ErdosRenyi(200, 0.05, 2);
  NamingConfig nc;
  nc.described_nodes_per_name = 10;
  nc.seed = 3;
  NameTable names = AssignNames(g, nc);
  std::vector<Description> ds;
  for (NodeId t : names.NodesIn(NodeGroup::kDescribed)) {
    if (ds.size() == 10) break;
    try {
      ds.push_back(FindShortestUnique(g, names, t, {}));
    } catch (const Error &) {
    }
  }
  ASSERT_FALSE(ds.empty());
  for (size_t k : {2, 5}) {
    AuditReport r = KAnonymityAudit(ds, g, names, k);
    EXPECT_EQ(r.flagged_count, ds.size());
  }
  EXPECT_EQ(KAnonymityAudit(ds, g, names, 1).flagged_count, 0u);
}

TEST(AuditTest, BatchBound) {
  Graph g = ErdosRenyi(1000, 0.5, 4);
  NameTable names = NameTable::Unique(1000);
  CandidateOptions o;
  o.strategy = Strategy::kRandom;
  o.nameless_target = true;
  std::vector<Description> ds;
  for (NodeId t = 0; t < 30; ++t) {
    ds.push_back(SampleCandidateDescription(g, names, t, 12, o, t));
  }
  AuditOptions ao;
  ao.salience_rate = 1.0;
  AuditReport r = KAnonymityAudit(ds, g, names, 10, ao);
  ASSERT_TRUE(r.bound.has_value());
  EXPECT_NEAR(*r.bound, std::log2(100.0), 1e-9);
  EXPECT_DOUBLE_EQ(r.mean_size, 12.0);
  EXPECT_TRUE(r.batch_flagged);
  EXPECT_GT(r.flagged_count, 20u);
}

TEST(AuditTest, EstimatesSalienceFromTruth) {
  Graph g = ErdosRenyi(500, 0.5, 5);
  NameTable names = NameTable::Unique(500);
  CandidateOptions o;
  o.strategy = Strategy::kRandom;
  o.nameless_target = true;
  std::vector<Description> ds;
  for (NodeId t = 0; t < 20; ++t) {
    ds.push_back(SampleCandidateDescription(g, names, t, 3, o, t));
  }
  AuditReport r = KAnonymityAudit(ds, g, names, 10);
  EXPECT_NEAR(r.salience_rate, 1.0, 1e-9);
  EXPECT_NEAR(r.descriptor_ambiguity, 0.0, 1e-12);
  ASSERT_TRUE(r.bound.has_value());
  EXPECT_FALSE(r.batch_flagged);
}

TEST(AuditTest, InvalidK) {
  Graph g = ErdosRenyi(10, 0.5, 6);
  NameTable names = NameTable::Unique(10);
  EXPECT_EQ(CodeOf([&] { KAnonymityAudit({}, g, names, 0); }),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(CodeOf([&] { KAnonymityAudit({}, g, names, 11); }),
            ErrorCode::kInvalidInput);
}

}  // namespace
}  // namespace refdesc
